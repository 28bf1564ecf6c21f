#include <braidinv/precision.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <ios>
#include <stdexcept>

namespace braidinv {

namespace {
constexpr unsigned kGuardDigits = 10;
}

unsigned default_float_digits() {
    const char* env = std::getenv("BRAIDINV_FLOAT_DIGITS");
    if (env == nullptr) return kDefaultFloatDigits;
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value < kMinFloatDigits) return kDefaultFloatDigits;
    return value;
}

FloatContext::FloatContext(unsigned digits)
    : digits_(digits), saved_(BigFloat::default_precision()) {
    if (digits < kMinFloatDigits) {
        throw std::invalid_argument("float precision must be at least " +
                                    std::to_string(kMinFloatDigits) + " digits");
    }
    BigFloat::default_precision(digits + kGuardDigits);
}

FloatContext::~FloatContext() { BigFloat::default_precision(saved_); }

BigFloat FloatContext::from(const Rational& value) const {
    BigFloat out;
    mpfr_set_q(out.backend().data(), value.get_mpq_t(), MPFR_RNDN);
    return out;
}

BigFloat FloatContext::pi() const {
    BigFloat out;
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
}

std::string FloatContext::format(const BigFloat& value) const {
    return value.str(static_cast<std::streamsize>(digits_ - 1), std::ios_base::scientific);
}

} // namespace braidinv

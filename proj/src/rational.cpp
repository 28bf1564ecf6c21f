#include <braidinv/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace braidinv {

std::string to_string(const Rational& value) {
    return value.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s));
    }
    const std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("denominator may not carry a sign: '" + std::string(s) + "'");
    }
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational power(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of coprime parts stay coprime; only the sign may need fixing.
    out.canonicalize();
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace braidinv

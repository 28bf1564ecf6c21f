#ifndef BRAIDINV_PRECISION_HPP
#define BRAIDINV_PRECISION_HPP

#include <braidinv/rational.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace braidinv {

// Extended-precision floats are used only for reporting comparisons
// against irrational limits (pi-dependent targets). Exact data never
// passes through them.
using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultFloatDigits = 50;
inline constexpr unsigned kMinFloatDigits = 10;

// BRAIDINV_FLOAT_DIGITS if set to a valid value >= kMinFloatDigits,
// otherwise kDefaultFloatDigits.
unsigned default_float_digits();

/*
 * Sets the working precision (significant decimal digits plus guard
 * digits) for BigFloat values created while it is alive. The mpfr
 * default precision is process-global, so float evaluation must stay on
 * a single thread.
 */
class FloatContext {
public:
    explicit FloatContext(unsigned digits);
    ~FloatContext();
    FloatContext(const FloatContext&) = delete;
    FloatContext& operator=(const FloatContext&) = delete;

    unsigned digits() const { return digits_; }
    BigFloat from(const Rational& value) const;
    BigFloat pi() const;
    // Rounded to digits() significant digits.
    std::string format(const BigFloat& value) const;

private:
    unsigned digits_;
    unsigned saved_;
};

} // namespace braidinv

#endif // BRAIDINV_PRECISION_HPP

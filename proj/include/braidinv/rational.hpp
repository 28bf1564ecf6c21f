#ifndef BRAIDINV_RATIONAL_HPP
#define BRAIDINV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidinv {

// Exact rational scalar. GMP keeps every mpq_class in canonical form
// (positive denominator, coprime parts) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form: "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& value);

// Accepts "p", "p/q", with optional sign and surrounding blanks.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// num/den in canonical form; mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

Rational power(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace braidinv

#endif // BRAIDINV_RATIONAL_HPP

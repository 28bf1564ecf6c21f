#ifndef BRAIDINV_BRAID_SUM_HPP
#define BRAIDINV_BRAID_SUM_HPP

#include <braidinv/rational.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>

namespace braidinv {

using Exponent = std::int64_t;

/*
 * A finite rational combination of elements of the braid group on two
 * strands. B2 is infinite cyclic on the half-twist, so an element is a
 * Laurent polynomial in q = sigma_1 (exponent n stands for q^n, negative
 * exponents for powers of p = q^-1).
 *
 * Canonical form: no stored coefficient is zero. The empty sum is zero.
 */
class BraidSum {
public:
    using Terms = std::map<Exponent, Rational>;

    BraidSum() = default;
    explicit BraidSum(Terms terms);

    static BraidSum identity();
    static BraidSum monomial(Exponent n, const Rational& c = 1);
    static BraidSum q() { return monomial(1); }
    static BraidSum p() { return monomial(-1); }
    // tau = q - p
    static BraidSum tau();
    // <n> = q^n - p^n
    static BraidSum pair(Exponent n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(Exponent n) const;
    Exponent min_exponent() const;
    Exponent max_exponent() const;

    BraidSum& operator+=(const BraidSum& other);
    BraidSum& operator-=(const BraidSum& other);
    BraidSum& operator*=(const Rational& scalar);

    friend bool operator==(const BraidSum&, const BraidSum&) = default;

private:
    void add_term(Exponent n, const Rational& c);

    Terms terms_;
};

BraidSum operator+(BraidSum a, const BraidSum& b);
BraidSum operator-(BraidSum a, const BraidSum& b);
BraidSum operator-(BraidSum a);
BraidSum operator*(BraidSum a, const Rational& c);
BraidSum operator*(const Rational& c, BraidSum a);
BraidSum operator*(const BraidSum& a, const BraidSum& b);

// ca*a + cb*b
BraidSum combine(const BraidSum& a, const Rational& ca, const BraidSum& b, const Rational& cb);
// Convolution product in the (commutative) group algebra.
BraidSum multiply(const BraidSum& a, const BraidSum& b);
BraidSum power(const BraidSum& base, unsigned k);
BraidSum tau_power(unsigned k);

// Vassiliev filtration order. A sum lies in A_(j) when its first j moments
// vanish, equivalently when (q - 1)^j divides it as a Laurent polynomial.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// i-th moment: sum over n of b_n * n^i.
Rational moment(const BraidSum& b, unsigned i);
int filtration_order_by_moments(const BraidSum& b);
int filtration_order_by_division(const BraidSum& b);
// Computes both routes; throws std::logic_error if they disagree.
int filtration_order(const BraidSum& b);

// "c*q^n + ..." in decreasing exponent order; "0" for the zero sum.
std::string to_string(const BraidSum& b);

// Parses the canonical rendering produced by to_string, plus the
// shorthands e, q, p, tau, tau^k, <n> and c*<n> terms.
// Throws std::invalid_argument on malformed input.
BraidSum parse_braid_sum(std::string_view text);

} // namespace braidinv

#endif // BRAIDINV_BRAID_SUM_HPP

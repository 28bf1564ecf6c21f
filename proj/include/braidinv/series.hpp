#ifndef BRAIDINV_SERIES_HPP
#define BRAIDINV_SERIES_HPP

#include <braidinv/rational.hpp>

#include <string>
#include <vector>

namespace braidinv {

/*
 * Dense formal power series in t, truncated at an explicit order N:
 * coefficients of t^0..t^N are exact, nothing beyond N is represented.
 * Binary operations on mixed orders truncate to the smaller order.
 */
class Series {
public:
    // Zero series truncated at `order`.
    explicit Series(unsigned order = 0);
    // coeffs.size() - 1 becomes the truncation order; coeffs must be nonempty.
    explicit Series(std::vector<Rational> coeffs);

    // t truncated at order (order >= 1 required).
    static Series variable(unsigned order);
    static Series constant(const Rational& c, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Zero for degrees beyond the truncation order.
    Rational operator[](unsigned degree) const;
    void set(unsigned degree, const Rational& value);

    Series truncated(unsigned order) const;
    bool is_zero() const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Rational& scalar);

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(Series a, const Rational& c);
Series operator*(const Rational& c, Series a);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);

// sum_i c^i / i! t^i
Series exp_scaled(const Rational& c, unsigned order);
// 2 sinh(t/2) = e^{t/2} - e^{-t/2}
Series two_sinh_half(unsigned order);

// outer(inner). Throws std::invalid_argument if inner has a nonzero
// constant term. Result order is min(outer.order(), inner.order()).
Series compose(const Series& outer, const Series& inner);

// Compositional inverse r with compose(r, s) = t through s.order().
// Solved degree by degree; requires s[0] == 0 and s[1] != 0.
Series revert(const Series& s);

// Taylor series of 2*arcsinh(x/2) from the closed-form arcsinh coefficients.
Series arcsinh2_closed_form(unsigned order);

// "c0 + c1*t + c2*t^2 + ..." listing nonzero terms, plus " + O(t^{N+1})".
std::string to_string(const Series& s);

} // namespace braidinv

#endif // BRAIDINV_SERIES_HPP

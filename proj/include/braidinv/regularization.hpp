#ifndef BRAIDINV_REGULARIZATION_HPP
#define BRAIDINV_REGULARIZATION_HPP

#include <braidinv/rational.hpp>

#include <vector>

namespace braidinv {

/*
 * numerator(x) / (1 + x^2)^denominator_power, numerator stored densely by
 * degree. Closed under theta = x d/dx, which raises the power by one.
 *
 * Divergent alternating sums 1^k - 3^k + 5^k - ... are given their Abel
 * value: theta^k applied to x/(1+x^2) = sum (-1)^m x^{2m+1}, evaluated at
 * x = 1.
 */
struct RationalFunctionRep {
    std::vector<Rational> numerator;
    unsigned denominator_power = 1;

    // x / (1 + x^2)
    static RationalFunctionRep odd_generating_function();

    Rational evaluate(const Rational& x) const;
    friend bool operator==(const RationalFunctionRep&, const RationalFunctionRep&) = default;
};

RationalFunctionRep theta(const RationalFunctionRep& f);
RationalFunctionRep theta_power(unsigned k);

// Abel value of sum_m (-1)^m (2m+1)^k, i.e. beta(-k).
Rational theta_value(unsigned k);

// 2^{s-3} s! pi Z_s(tauhat) for odd s >= 3, reduced exactly to the
// regularized sum beta(2 - s). Throws std::invalid_argument otherwise.
Rational beta_relation_lhs(unsigned s);

// sum_{m=0}^{r-1} (-1)^m / (2m+1)
Rational leibniz_partial(unsigned r);

// pi * Z_1 of the r-term truncation of tauhat, i.e. 4 * leibniz_partial(r).
Rational z1_tauhat_partial(unsigned r);

} // namespace braidinv

#endif // BRAIDINV_REGULARIZATION_HPP

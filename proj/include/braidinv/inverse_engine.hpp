#ifndef BRAIDINV_INVERSE_ENGINE_HPP
#define BRAIDINV_INVERSE_ENGINE_HPP

#include <braidinv/braid_sum.hpp>
#include <braidinv/precision.hpp>
#include <braidinv/series.hpp>

#include <map>
#include <string>
#include <vector>

namespace braidinv {

/*
 * A coherent weak inverse on B2, t |-> P(seed), stored as the polynomial
 * coefficients of P (degree k -> coefficient of seed^k). Since every value
 * space A_{2,i} is spanned by t^i, the lift is fixed by its seed and the
 * polynomial; strengthening only changes the polynomial.
 */
struct LiftPoly {
    std::map<unsigned, Rational> coeffs;
    BraidSum seed = BraidSum::tau();

    Rational coefficient(unsigned degree) const;
    unsigned degree() const;
    // Keeps only degrees <= max_degree.
    LiftPoly truncated(unsigned max_degree) const;

    friend bool operator==(const LiftPoly&, const LiftPoly&) = default;
};

// Coefficients of <n> = q^n - p^n, n > 0.
struct PairExpansion {
    std::map<Exponent, Rational> pair_coeffs;

    Rational coefficient(Exponent n) const;

    friend bool operator==(const PairExpansion&, const PairExpansion&) = default;
};

// P(seed) expanded in the group algebra.
BraidSum evaluate(const LiftPoly& lift);
// P as a series in its own variable, truncated at `order`.
Series as_series(const LiftPoly& lift, unsigned order);
// Z(P(seed)) computed as P(Z(seed)).
Series lifted_kontsevich(const LiftPoly& lift, unsigned order);

// Removes the t^m error of Z(P(seed)) with the coherent lift of t^m.
// Requires Z(P(seed)) = t + O(t^m); throws std::invalid_argument otherwise.
LiftPoly strengthen_step(const LiftPoly& lift, unsigned m);

// Starts from seed / Z_1(seed) and applies strengthen_step for m = 2..order.
// Throws std::invalid_argument unless the seed has filtration order 1.
LiftPoly strengthen_to(const BraidSum& seed, unsigned order);

// tau-seeded strong lift obtained by reverting 2 sinh(t/2).
LiftPoly lift_via_reversion(unsigned order);

// Regroups P(tau) into <n> pairs. Throws std::invalid_argument for a seed
// other than tau, std::logic_error if P(tau) is not antisymmetric.
PairExpansion q_expand(const LiftPoly& lift);
// Regroups an antisymmetric sum (b_{-n} = -b_n, no identity term) into
// <n> pairs. Throws std::logic_error otherwise.
PairExpansion regroup_pairs(const BraidSum& b);
// sum_n c_n (q^n - p^n)
BraidSum rebuild(const PairExpansion& expansion);

// Limit of the <j> coefficient: 4/(pi j^2) with the alternating sign of the
// j-th odd term, i.e. +1 for j = 1, 5, 9, ... and -1 for j = 3, 7, ...
int asymptotic_sign(unsigned j);

struct AsymptoticRow {
    unsigned order = 0;
    Rational coefficient;
    BigFloat coefficient_value;
    BigFloat target;
    BigFloat abs_error;
};

// Coefficient of <j> in q_expand(strengthen_to(tau, r)) for each r, compared
// with its limit. Exact rows are computed on up to `jobs` threads; output
// order follows `orders`. Throws std::invalid_argument on even j or r < j.
std::vector<AsymptoticRow> asymptotic_check(unsigned j, const std::vector<unsigned>& orders,
                                            const FloatContext& ctx, unsigned jobs = 1);

struct CoefficientRow {
    unsigned degree = 0;
    Integer numerator;
    Integer denominator;
    Integer arcsinh_numerator;
    bool numerator_matches = false;
};

// Numerators/denominators of the lift coefficients with the arcsinh(x)
// Taylor numerators of the same degree as a cross-check.
std::vector<CoefficientRow> coefficient_report(const LiftPoly& lift);

// Taylor coefficient of arcsinh(x) at x^{2k+1}.
Rational arcsinh_taylor(unsigned k);

// ((2m+1)!! / (2m)!!)^2 / (m+1), the Wallis-type ratio observed to equal
// the <1> coefficient at order 2m+1.
Rational wallis_ratio(unsigned m);

std::string to_string(const LiftPoly& lift);
std::string to_string(const PairExpansion& expansion);

} // namespace braidinv

#endif // BRAIDINV_INVERSE_ENGINE_HPP

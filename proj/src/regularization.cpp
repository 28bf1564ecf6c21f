#include <braidinv/regularization.hpp>

#include <stdexcept>

namespace braidinv {

RationalFunctionRep RationalFunctionRep::odd_generating_function() {
    return {{Rational(0), Rational(1)}, 1};
}

Rational RationalFunctionRep::evaluate(const Rational& x) const {
    Rational num;
    for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) num = num * x + *it;
    const Rational den = power(1 + x * x, denominator_power);
    return num / den;
}

RationalFunctionRep theta(const RationalFunctionRep& f) {
    // theta(P / D^k) = x (P' D - 2k x P) / D^{k+1}, D = 1 + x^2
    const std::size_t n = f.numerator.size();
    std::vector<Rational> out(n + 2);
    for (std::size_t i = 1; i < n; ++i) {
        const Rational d = f.numerator[i] * static_cast<unsigned long>(i);
        // x * P' contributes i a_i x^i; x^3 * P' contributes i a_i x^{i+2}
        out[i] += d;
        out[i + 2] += d;
    }
    const Rational two_k = 2 * f.denominator_power;
    for (std::size_t i = 0; i < n; ++i) out[i + 2] -= two_k * f.numerator[i];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return {std::move(out), f.denominator_power + 1};
}

RationalFunctionRep theta_power(unsigned k) {
    RationalFunctionRep f = RationalFunctionRep::odd_generating_function();
    for (unsigned i = 0; i < k; ++i) f = theta(f);
    return f;
}

Rational theta_value(unsigned k) {
    return theta_power(k).evaluate(1);
}

Rational beta_relation_lhs(unsigned s) {
    if (s < 3 || s % 2 == 0) {
        throw std::invalid_argument("beta relation is stated for odd s >= 3, got " + std::to_string(s));
    }
    // pi * tauhat = 4 sum_m (-1)^m <2m+1> / (2m+1)^2 and, for odd s,
    // Z_s(<n>) = 2 (n/2)^s / s!. Hence
    //   pi Z_s(tauhat) = 8 / (2^s s!) * sum_m (-1)^m (2m+1)^{s-2}.
    Integer two_s;
    mpz_ui_pow_ui(two_s.get_mpz_t(), 2, s);
    Rational per_term_factor(Integer(8), two_s * factorial(s));
    per_term_factor.canonicalize();
    const Rational prefactor = Rational(two_s / 8) * factorial(s) * per_term_factor;
    return prefactor * theta_value(s - 2);
}

namespace {

// Pairwise summation keeps the operands balanced in size.
Rational leibniz_range(unsigned lo, unsigned hi) {
    if (hi - lo == 1) {
        Rational term(1, 2 * lo + 1);
        return lo % 2 == 0 ? term : Rational(-term);
    }
    const unsigned mid = lo + (hi - lo) / 2;
    return leibniz_range(lo, mid) + leibniz_range(mid, hi);
}

} // namespace

Rational leibniz_partial(unsigned r) {
    if (r == 0) return 0;
    return leibniz_range(0, r);
}

Rational z1_tauhat_partial(unsigned r) {
    return 4 * leibniz_partial(r);
}

} // namespace braidinv

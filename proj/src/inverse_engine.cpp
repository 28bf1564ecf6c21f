#include <braidinv/inverse_engine.hpp>
#include <braidinv/kontsevich.hpp>

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace braidinv {

Rational LiftPoly::coefficient(unsigned degree) const {
    const auto it = coeffs.find(degree);
    return it == coeffs.end() ? Rational(0) : it->second;
}

unsigned LiftPoly::degree() const {
    return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

LiftPoly LiftPoly::truncated(unsigned max_degree) const {
    LiftPoly out;
    out.seed = seed;
    for (const auto& [k, c] : coeffs) {
        if (k <= max_degree) out.coeffs.emplace(k, c);
    }
    return out;
}

Rational PairExpansion::coefficient(Exponent n) const {
    const auto it = pair_coeffs.find(n);
    return it == pair_coeffs.end() ? Rational(0) : it->second;
}

BraidSum evaluate(const LiftPoly& lift) {
    BraidSum out;
    BraidSum seed_pow = BraidSum::identity();
    unsigned current = 0;
    for (const auto& [k, c] : lift.coeffs) {
        for (; current < k; ++current) seed_pow = multiply(seed_pow, lift.seed);
        out += seed_pow * c;
    }
    return out;
}

Series as_series(const LiftPoly& lift, unsigned order) {
    Series s(order);
    for (const auto& [k, c] : lift.coeffs) {
        if (k <= order) s.set(k, c);
    }
    return s;
}

Series lifted_kontsevich(const LiftPoly& lift, unsigned order) {
    return compose(as_series(lift, order), kontsevich(lift.seed, order));
}

namespace {

Rational seed_scale(const BraidSum& seed) {
    const Rational a = kontsevich_component(seed, 1);
    if (a == 0 || kontsevich_component(seed, 0) != 0) {
        throw std::invalid_argument("seed must have filtration order 1, got " + to_string(seed));
    }
    return a;
}

} // namespace

LiftPoly strengthen_step(const LiftPoly& lift, unsigned m) {
    if (m == 0) throw std::invalid_argument("strengthen_step: m must be positive");
    const Rational a = seed_scale(lift.seed);
    const Series z = lifted_kontsevich(lift, m);
    for (unsigned i = 0; i < m; ++i) {
        const Rational expected = i == 1 ? 1 : 0;
        if (z[i] != expected) {
            throw std::invalid_argument("strengthen_step(m=" + std::to_string(m) +
                                        "): lift is off at degree " + std::to_string(i) +
                                        "; earlier steps were not applied");
        }
    }
    const Rational off = z[m] - (m == 1 ? Rational(1) : Rational(0));
    if (off == 0) return lift;

    LiftPoly out = lift;
    Rational& slot = out.coeffs[m];
    // Z(seed^m) = a^m t^m + O(t^{m+1})
    slot -= off / power(a, m);
    if (slot == 0) out.coeffs.erase(m);
    return out;
}

LiftPoly strengthen_to(const BraidSum& seed, unsigned order) {
    if (order == 0) throw std::invalid_argument("strengthen_to: order must be positive");
    if (filtration_order(seed) != 1) {
        throw std::invalid_argument("strengthen_to: seed must have filtration order 1, got " +
                                    to_string(seed));
    }
    LiftPoly lift;
    lift.seed = seed;
    lift.coeffs[1] = 1 / seed_scale(seed);
    for (unsigned m = 2; m <= order; ++m) lift = strengthen_step(lift, m);
    return lift;
}

LiftPoly lift_via_reversion(unsigned order) {
    if (order == 0) throw std::invalid_argument("lift_via_reversion: order must be positive");
    const Series r = revert(two_sinh_half(order));
    LiftPoly lift;
    for (unsigned k = 1; k <= order; ++k) {
        if (r[k] != 0) lift.coeffs.emplace(k, r[k]);
    }
    return lift;
}

PairExpansion regroup_pairs(const BraidSum& b) {
    if (b.coefficient(0) != 0) {
        throw std::logic_error("expansion has an identity term: " + to_string(b));
    }
    PairExpansion out;
    for (const auto& [n, c] : b.terms()) {
        if (b.coefficient(-n) != -c) {
            throw std::logic_error("expansion is not antisymmetric: " + to_string(b));
        }
        if (n > 0) out.pair_coeffs.emplace(n, c);
    }
    return out;
}

PairExpansion q_expand(const LiftPoly& lift) {
    if (lift.seed != BraidSum::tau()) {
        throw std::invalid_argument("q_expand: lift must be seeded by tau");
    }
    return regroup_pairs(evaluate(lift));
}

BraidSum rebuild(const PairExpansion& expansion) {
    BraidSum out;
    for (const auto& [n, c] : expansion.pair_coeffs) out += BraidSum::pair(n) * c;
    return out;
}

int asymptotic_sign(unsigned j) {
    return (j / 2) % 2 == 0 ? 1 : -1;
}

std::vector<AsymptoticRow> asymptotic_check(unsigned j, const std::vector<unsigned>& orders,
                                            const FloatContext& ctx, unsigned jobs) {
    if (j % 2 == 0) throw std::invalid_argument("asymptotic_check: j must be odd");
    for (unsigned r : orders) {
        if (r % 2 == 0 || r < j) {
            throw std::invalid_argument("asymptotic_check: orders must be odd and >= j, got " +
                                        std::to_string(r));
        }
    }
    if (orders.empty()) return {};

    // Step m only touches degree m, so every truncation is a prefix.
    const LiftPoly full = strengthen_to(BraidSum::tau(), *std::max_element(orders.begin(), orders.end()));

    std::vector<Rational> coeffs(orders.size());
    const auto compute = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < orders.size(); i += stride) {
            coeffs[i] = q_expand(full.truncated(orders[i])).coefficient(static_cast<Exponent>(j));
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, orders.size());
    std::vector<std::future<void>> pending;
    for (std::size_t w = 1; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, compute, w, workers));
    }
    compute(0, workers);
    for (auto& f : pending) f.get();

    const BigFloat target = BigFloat(4 * asymptotic_sign(j)) / (ctx.pi() * j * j);
    std::vector<AsymptoticRow> rows;
    rows.reserve(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        AsymptoticRow row;
        row.order = orders[i];
        row.coefficient = coeffs[i];
        row.coefficient_value = ctx.from(coeffs[i]);
        row.target = target;
        row.abs_error = abs(row.coefficient_value - target);
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational arcsinh_taylor(unsigned k) {
    Integer den = factorial(k);
    den *= den;
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    den *= four_k;
    den *= 2 * k + 1;
    Rational c(factorial(2 * k), den);
    c.canonicalize();
    return k % 2 == 0 ? c : Rational(-c);
}

std::vector<CoefficientRow> coefficient_report(const LiftPoly& lift) {
    if (lift.seed != BraidSum::tau()) {
        throw std::invalid_argument("coefficient_report: lift must be seeded by tau");
    }
    std::vector<CoefficientRow> rows;
    for (const auto& [k, c] : lift.coeffs) {
        CoefficientRow row;
        row.degree = k;
        row.numerator = c.get_num();
        row.denominator = c.get_den();
        if (k % 2 == 1) {
            row.arcsinh_numerator = arcsinh_taylor((k - 1) / 2).get_num();
            row.numerator_matches = abs(row.numerator) == abs(row.arcsinh_numerator);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational wallis_ratio(unsigned m) {
    Integer odd;
    Integer even;
    mpz_2fac_ui(odd.get_mpz_t(), 2 * m + 1);
    mpz_2fac_ui(even.get_mpz_t(), 2 * m);
    Rational r(odd, even);
    r.canonicalize();
    return r * r / (m + 1);
}

std::string to_string(const LiftPoly& lift) {
    if (lift.coeffs.empty()) return "0";
    const char* var = lift.seed == BraidSum::tau() ? "tau" : "s";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : lift.coeffs) {
        if (!first) out << " + ";
        out << to_string(c) << "*" << var << "^" << k;
        first = false;
    }
    return out.str();
}

std::string to_string(const PairExpansion& expansion) {
    if (expansion.pair_coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, c] : expansion.pair_coeffs) {
        if (!first) out << " + ";
        out << to_string(c) << "*<" << n << ">";
        first = false;
    }
    return out.str();
}

} // namespace braidinv

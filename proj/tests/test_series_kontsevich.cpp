#include <doctest.h>

#include "oracles.hpp"

#include <braidinv/kontsevich.hpp>
#include <braidinv/series.hpp>

using namespace braidinv;

namespace {

Series from_coeffs(const oracle::Coeffs& c) { return Series(c); }

BraidSum from_terms(const std::map<std::int64_t, Rational>& terms) {
    BraidSum b;
    for (const auto& [n, c] : terms) b += BraidSum::monomial(n, c);
    return b;
}

// Coefficients of e^{c t}: c^i / i!, written out directly.
Series exp_oracle(const Rational& c, unsigned order) {
    std::vector<Rational> out;
    Rational term = 1;
    for (unsigned i = 0; i <= order; ++i) {
        out.push_back(term);
        term = term * c / Rational(static_cast<long>(i + 1));
    }
    return Series(out);
}

Series parse_series(const std::vector<std::string>& cells) {
    std::vector<Rational> out;
    for (const auto& c : cells) out.push_back(parse_rational(c));
    return Series(out);
}

} // namespace

TEST_SUITE("series") {
    TEST_CASE("construction and truncation") {
        const Series t = Series::variable(4);
        CHECK(t.order() == 4);
        CHECK(t[1] == 1);
        CHECK(t[9] == 0);
        CHECK(Series::constant(3, 2)[0] == 3);
        CHECK((t * t)[2] == 1);
        CHECK((t + Series::variable(2)).order() == 2);
        CHECK(Series(5).is_zero());
        CHECK(to_string(Series::variable(3)) == "1*t + O(t^4)");
    }

    TEST_CASE("exp_scaled against direct coefficients") {
        for (const Rational& c : {Rational(0), ratio(1, 2), ratio(-3, 2), Rational(2)}) {
            CHECK(exp_scaled(c, 12) == exp_oracle(c, 12));
        }
    }

    TEST_CASE("exp_scaled is multiplicative") {
        oracle::RandomSums gen(5);
        for (int trial = 0; trial < 30; ++trial) {
            const Rational a = gen.rational();
            const Rational b = gen.rational();
            CHECK(exp_scaled(a, 10) * exp_scaled(b, 10) == exp_scaled(a + b, 10));
        }
    }

    TEST_CASE("compose rejects a nonzero inner constant") {
        CHECK_THROWS_AS(compose(Series::variable(3), Series::constant(1, 3)), std::invalid_argument);
        CHECK_THROWS_AS(revert(Series::constant(1, 3)), std::invalid_argument);
        CHECK_THROWS_AS(revert(Series::variable(3) * Series::variable(3)), std::invalid_argument);
    }

    TEST_CASE("reversion matches Lagrange inversion") {
        const Series s = two_sinh_half(25);
        const auto lagrange = oracle::lagrange_inverse(s.coeffs(), 25);
        CHECK(revert(s) == from_coeffs(lagrange));
        CHECK(revert(s) == arcsinh2_closed_form(25));
    }

    TEST_CASE("reversion round trip on random admissible series") {
        oracle::RandomSums gen(99);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rational> c(14, 0);
            for (std::size_t i = 1; i < c.size(); ++i) c[i] = gen.rational();
            if (c[1] == 0) c[1] = ratio(3, 2);
            const Series s(c);
            const Series r = revert(s);
            CHECK(compose(r, s) == Series::variable(13));
            CHECK(compose(s, r) == Series::variable(13));
            CHECK(r == from_coeffs(oracle::lagrange_inverse(c, 13)));
        }
    }
}

TEST_SUITE("kontsevich") {
    TEST_CASE("golden vectors through t^7") {
        CHECK(kontsevich(BraidSum::q(), 7) ==
              parse_series({"1", "1/2", "1/8", "1/48", "1/384", "1/3840", "1/46080", "1/645120"}));
        CHECK(kontsevich(BraidSum::p(), 7) ==
              parse_series({"1", "-1/2", "1/8", "-1/48", "1/384", "-1/3840", "1/46080", "-1/645120"}));
        CHECK(kontsevich(BraidSum::tau(), 7) ==
              parse_series({"0", "1", "0", "1/24", "0", "1/1920", "0", "1/322560"}));
        CHECK(kontsevich(BraidSum::tau(), 9) == two_sinh_half(9));
    }

    TEST_CASE("doubling tau doubles the series rather than doubling the argument") {
        const Series twice = kontsevich(BraidSum::tau() * 2, 7);
        CHECK(twice == kontsevich(BraidSum::tau(), 7) * 2);
        // 2 sinh(t) has t^3 coefficient 1/3, not 1/12.
        CHECK(twice[3] == ratio(1, 12));
    }

    TEST_CASE("components, residue and focus") {
        const BraidSum t3 = tau_power(3);
        CHECK(residue(BraidSum::tau()) == GradedValue{1, 1});
        CHECK(residue(t3) == GradedValue{3, 1});
        CHECK(residue(BraidSum::identity()) == GradedValue{0, 1});
        CHECK_THROWS_AS(residue(BraidSum()), std::invalid_argument);
        CHECK(kontsevich_component(BraidSum::monomial(2), 3) == ratio(1, 6));
        CHECK(is_focussed(focus_profile(BraidSum::tau(), 1), 1));
        CHECK_FALSE(is_focussed(focus_profile(BraidSum::tau(), 3), 1));
    }
}

TEST_SUITE("kontsevich_properties") {
    TEST_CASE("homomorphism and linearity on random sums") {
        oracle::RandomSums gen(314159);
        for (int trial = 0; trial < 60; ++trial) {
            const BraidSum a = from_terms(gen.terms(4, 5));
            const BraidSum b = from_terms(gen.terms(4, 5));
            const Rational ca = gen.rational();
            const Rational cb = gen.rational();
            const unsigned n = 10;
            CHECK(kontsevich(multiply(a, b), n) == kontsevich(a, n) * kontsevich(b, n));
            CHECK(kontsevich(combine(a, ca, b, cb), n) == kontsevich(a, n) * ca + kontsevich(b, n) * cb);
            const Series z = kontsevich(a, n);
            for (unsigned i = 0; i <= n; ++i) CHECK(kontsevich_component(a, i) == z[i]);
        }
    }

    TEST_CASE("components below the filtration order vanish") {
        oracle::RandomSums gen(2718);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<unsigned> k(0, 5);
            const BraidSum b = multiply(from_terms(gen.terms(3, 4)), tau_power(k(gen.rng)));
            if (b.is_zero()) continue;
            const int j = filtration_order(b);
            for (int i = 0; i < j; ++i) CHECK(kontsevich_component(b, static_cast<unsigned>(i)) == 0);
            CHECK(kontsevich_component(b, static_cast<unsigned>(j)) != 0);
            CHECK(residue(b).order == static_cast<unsigned>(j));
        }
    }
}

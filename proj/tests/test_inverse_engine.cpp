#include <doctest.h>

#include "oracles.hpp"

#include <braidinv/inverse_engine.hpp>
#include <braidinv/kontsevich.hpp>

using namespace braidinv;

TEST_SUITE("inverse_engine") {
    TEST_CASE("tau lift through order 13") {
        const LiftPoly lift = strengthen_to(BraidSum::tau(), 13);
        const std::map<unsigned, Rational> expected{
            {1, 1},
            {3, ratio(-1, 24)},
            {5, ratio(3, 640)},
            {7, ratio(-5, 7168)},
            {9, ratio(35, 294912)},
            {11, ratio(-63, 2883584)},
            {13, ratio(231, 54525952)},
        };
        CHECK(lift.coeffs == expected);
        CHECK(to_string(lift.truncated(3)) == "1*tau^1 + -1/24*tau^3");
    }

    TEST_CASE("strengthening agrees with reversion and the closed form") {
        for (unsigned n = 1; n <= 25; n += 2) {
            CAPTURE(n);
            const LiftPoly a = strengthen_to(BraidSum::tau(), n);
            const LiftPoly b = lift_via_reversion(n);
            CHECK(a == b);
            CHECK(as_series(a, n) == arcsinh2_closed_form(n));
            const auto lagrange = oracle::lagrange_inverse(two_sinh_half(n).coeffs(), n);
            CHECK(as_series(a, n) == Series(lagrange));
        }
    }

    TEST_CASE("the lift inverts Z up to its order") {
        for (unsigned n : {1u, 4u, 9u, 14u}) {
            const LiftPoly lift = strengthen_to(BraidSum::tau(), n);
            CHECK(compose(as_series(lift, n), two_sinh_half(n)) == Series::variable(n));
            CHECK(lifted_kontsevich(lift, n) == kontsevich(evaluate(lift), n));
        }
    }

    TEST_CASE("single strengthening steps") {
        LiftPoly lift{{{1, Rational(1)}}, BraidSum::tau()};
        lift = strengthen_step(lift, 2);
        CHECK(lift.coeffs.size() == 1);
        lift = strengthen_step(lift, 3);
        CHECK(lift.coefficient(3) == ratio(-1, 24));
        CHECK(lifted_kontsevich(lift, 5)[5] == ratio(-3, 640));
        lift = strengthen_step(strengthen_step(lift, 4), 5);
        CHECK(lifted_kontsevich(lift, 7)[7] == ratio(5, 7168));
        // Skipping step 3 leaves a t^3 error, so step 4 must refuse.
        CHECK_THROWS_AS(strengthen_step(LiftPoly{{{1, Rational(1)}}, BraidSum::tau()}, 4),
                        std::invalid_argument);
    }

    TEST_CASE("other seeds of filtration order one") {
        const BraidSum seed = (BraidSum::q() - BraidSum::identity()) * 2;
        const LiftPoly lift = strengthen_to(seed, 8);
        CHECK(lift.coefficient(1) == 1);
        CHECK(lifted_kontsevich(lift, 8) == Series::variable(8));
        CHECK(kontsevich(evaluate(lift), 8) == Series::variable(8));
        CHECK_THROWS_AS(strengthen_to(tau_power(2), 3), std::invalid_argument);
        CHECK_THROWS_AS(strengthen_to(BraidSum::identity(), 3), std::invalid_argument);
        CHECK_THROWS_AS(q_expand(lift), std::invalid_argument);
    }

    TEST_CASE("pair expansion rows") {
        const LiftPoly lift = strengthen_to(BraidSum::tau(), 11);
        const PairExpansion e3 = q_expand(lift.truncated(3));
        CHECK(e3.pair_coeffs == std::map<Exponent, Rational>{{1, ratio(9, 8)}, {3, ratio(-1, 24)}});
        const PairExpansion e11 = q_expand(lift);
        CHECK(e11.coefficient(1) == ratio(160083, 131072));
        CHECK(e11.coefficient(3) == ratio(-12705, 131072));
        CHECK(e11.coefficient(11) == ratio(-63, 2883584));
        CHECK(to_string(e3) == "9/8*<1> + -1/24*<3>");
        CHECK_THROWS_AS(regroup_pairs(BraidSum::q()), std::logic_error);
        CHECK_THROWS_AS(regroup_pairs(BraidSum::identity()), std::logic_error);
    }

    TEST_CASE("expansion rebuilds the evaluated lift") {
        for (unsigned n = 1; n <= 21; n += 2) {
            const LiftPoly lift = strengthen_to(BraidSum::tau(), n);
            CHECK(rebuild(q_expand(lift)) == evaluate(lift));
        }
    }

    TEST_CASE("leading pair coefficient is a Wallis ratio") {
        const LiftPoly lift = strengthen_to(BraidSum::tau(), 31);
        for (unsigned m = 0; m <= 15; ++m) {
            CAPTURE(m);
            CHECK(q_expand(lift.truncated(2 * m + 1)).coefficient(1) == wallis_ratio(m));
        }
    }

    TEST_CASE("coefficient report numerators") {
        const auto rows = coefficient_report(strengthen_to(BraidSum::tau(), 13));
        REQUIRE(rows.size() == 7);
        CHECK(rows[1].degree == 3);
        CHECK(rows[1].numerator == -1);
        CHECK(rows[1].denominator == 24);
        for (const auto& row : rows) CHECK(row.numerator_matches);
        CHECK(arcsinh_taylor(1) == ratio(-1, 6));
    }

    TEST_CASE("asymptotic sign and argument checks") {
        CHECK(asymptotic_sign(1) == 1);
        CHECK(asymptotic_sign(3) == -1);
        CHECK(asymptotic_sign(5) == 1);
        CHECK(asymptotic_sign(7) == -1);
        const FloatContext ctx(20);
        CHECK_THROWS_AS(asymptotic_check(2, {7}, ctx), std::invalid_argument);
        CHECK_THROWS_AS(asymptotic_check(9, {7}, ctx), std::invalid_argument);
    }

    TEST_CASE("parallel and serial asymptotic rows agree") {
        std::vector<unsigned> orders;
        for (unsigned r = 7; r <= 29; r += 2) orders.push_back(r);
        const FloatContext ctx(30);
        const auto serial = asymptotic_check(1, orders, ctx, 1);
        const auto parallel = asymptotic_check(1, orders, ctx, 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].order == orders[i]);
            CHECK(serial[i].coefficient == parallel[i].coefficient);
            CHECK(ctx.format(serial[i].abs_error) == ctx.format(parallel[i].abs_error));
        }
    }
}

TEST_SUITE("inverse_engine_properties") {
    TEST_CASE("products of lifts agree with lifts of products to higher filtration") {
        const BraidSum l2 = evaluate(strengthen_to(BraidSum::tau(), 2));
        const BraidSum l5 = evaluate(strengthen_to(BraidSum::tau(), 5));
        const BraidSum l8 = evaluate(strengthen_to(BraidSum::tau(), 8));
        for (unsigned i = 1; i <= 5; ++i) {
            for (unsigned j = 1; i + j <= 6; ++j) {
                CAPTURE(i);
                CAPTURE(j);
                const BraidSum product = multiply(power(l2, i), power(l5, j));
                const BraidSum next = power(l8, i + j);
                CHECK(filtration_order(product - next) >= static_cast<int>(i + j + 1));
            }
        }
    }
}

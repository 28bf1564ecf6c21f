#include <doctest.h>

#include "oracles.hpp"

#include <braidinv/precision.hpp>
#include <braidinv/regularization.hpp>

#include <cmath>

using namespace braidinv;

TEST_SUITE("regularization") {
    TEST_CASE("generating function and theta") {
        const RationalFunctionRep f = RationalFunctionRep::odd_generating_function();
        CHECK(f.evaluate(1) == ratio(1, 2));
        CHECK(f.evaluate(2) == ratio(2, 5));
        CHECK(theta_power(0) == f);
        // theta(x/(1+x^2)) = (x - x^3)/(1+x^2)^2
        const RationalFunctionRep g = theta(f);
        CHECK(g.denominator_power == 2);
        CHECK(g.evaluate(2) == ratio(2 - 8, 25));
    }

    TEST_CASE("odd orders vanish") {
        for (unsigned k = 1; k <= 13; k += 2) {
            CAPTURE(k);
            CHECK(theta_value(k) == 0);
        }
    }

    TEST_CASE("even orders are half the Euler numbers") {
        const auto euler = oracle::euler_numbers(12);
        CHECK(euler[2] == -1);
        CHECK(euler[4] == 5);
        CHECK(euler[6] == -61);
        for (unsigned k = 0; k <= 12; k += 2) {
            CAPTURE(k);
            CHECK(theta_value(k) == euler[k] / 2);
        }
    }

    TEST_CASE("reflection x -> 1/x") {
        for (unsigned k = 0; k <= 9; ++k) {
            const RationalFunctionRep f = theta_power(k);
            for (const Rational& x : {ratio(1, 3), ratio(2, 7), Rational(5)}) {
                const Rational sign = k % 2 == 0 ? 1 : -1;
                CHECK(f.evaluate(1 / x) == sign * f.evaluate(x));
            }
        }
    }

    TEST_CASE("exact values are the numerical Abel limits") {
        const auto numeric = oracle::abel_numeric(6, 1e-4);
        for (unsigned k = 0; k <= 6; ++k) {
            CAPTURE(k);
            const double exact = theta_value(k).get_d();
            CHECK(std::abs(numeric[k] - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }

    TEST_CASE("beta relation") {
        for (unsigned s : {3u, 5u, 7u, 9u, 11u}) {
            CAPTURE(s);
            CHECK(beta_relation_lhs(s) == 0);
        }
        CHECK_THROWS_AS(beta_relation_lhs(1), std::invalid_argument);
        CHECK_THROWS_AS(beta_relation_lhs(4), std::invalid_argument);
    }

    TEST_CASE("Leibniz partial sums") {
        CHECK(leibniz_partial(1) == 1);
        CHECK(leibniz_partial(2) == ratio(2, 3));
        CHECK(leibniz_partial(3) == ratio(13, 15));
        Rational direct = 0;
        for (unsigned m = 0; m < 200; ++m) direct += ratio(m % 2 == 0 ? 1 : -1, 2 * m + 1);
        CHECK(leibniz_partial(200) == direct);
        CHECK(z1_tauhat_partial(200) == 4 * direct);

        const FloatContext ctx(40);
        const BigFloat estimate = ctx.from(z1_tauhat_partial(10000)) / ctx.pi();
        CHECK(abs(estimate - 1) < BigFloat("1e-4"));
    }
}

#include <doctest.h>

#include "oracles.hpp"

#include <braidinv/basis_solver.hpp>
#include <braidinv/kontsevich.hpp>

using namespace braidinv;

namespace {

oracle::Matrix to_rows(const ExactMatrix& m) {
    oracle::Matrix out(m.dim(), std::vector<Rational>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

Rational vandermonde(const std::vector<Exponent>& nodes) {
    Rational d = 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) d *= Rational(static_cast<long>(nodes[j] - nodes[i]));
    }
    return d;
}

std::vector<Rational> parse_all(const std::vector<std::string>& cells) {
    std::vector<Rational> out;
    for (const auto& c : cells) out.push_back(parse_rational(c));
    return out;
}

} // namespace

TEST_SUITE("basis_solver") {
    TEST_CASE("node orders") {
        CHECK(balanced_nodes(2) == std::vector<Exponent>{0, 1, -1, 2, -2});
        CHECK(unbalanced_nodes(3) == std::vector<Exponent>{0, 1, 2, 3});
        CHECK(build_balanced(1)(1, 2) == -1);
        CHECK(build_balanced(1)(2, 2) == 1);
        CHECK(build_balanced(2, true)(2, 3) == 2);
        CHECK(power_matrix({0, 2}, false)(0, 0) == 1);
    }

    TEST_CASE("inverse matches plain Gauss-Jordan up to dimension 21") {
        for (unsigned r = 0; r <= 10; ++r) {
            for (bool fact : {false, true}) {
                const ExactMatrix m = build_balanced(r, fact);
                const ExactMatrix n = invert(m);
                CHECK(to_rows(n) == oracle::gauss_jordan_inverse(to_rows(m)));
                CHECK(m * n == ExactMatrix::identity(m.dim()));
                CHECK(n * m == ExactMatrix::identity(m.dim()));
            }
        }
        for (unsigned r = 0; r <= 20; ++r) {
            const ExactMatrix m = build_unbalanced(r);
            const ExactMatrix n = invert(m);
            CHECK(m * n == ExactMatrix::identity(m.dim()));
            CHECK(n * m == ExactMatrix::identity(m.dim()));
        }
    }

    TEST_CASE("random rational matrices") {
        oracle::RandomSums gen(4242);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t dim = 1 + trial % 7;
            ExactMatrix m(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) m(i, j) = gen.rational();
            }
            const auto expected = oracle::gauss_jordan_inverse(to_rows(m));
            if (expected.empty()) {
                CHECK_THROWS_AS(invert(m), SingularMatrixError);
                CHECK(determinant(m) == 0);
            } else {
                CHECK(to_rows(invert(m)) == expected);
                CHECK(determinant(m) != 0);
            }
        }
    }

    TEST_CASE("singular input") {
        ExactMatrix m(3);
        m(0, 0) = 1;
        m(1, 1) = 1;
        CHECK_THROWS_AS(invert(m), SingularMatrixError);
        CHECK(determinant(m) == 0);
        CHECK_THROWS_AS(invert(power_matrix({1, 1}, false)), SingularMatrixError);
    }

    TEST_CASE("determinants are Vandermonde products") {
        for (unsigned r = 0; r <= 10; ++r) {
            CHECK(determinant(build_balanced(r)) == vandermonde(balanced_nodes(r)));
            CHECK(determinant(build_balanced(r)) != 0);
        }
    }

    TEST_CASE("(1,3) entries and the zeta(2) partial sums") {
        const auto rows = zeta2_check(10);
        REQUIRE(rows.size() == 10);
        Rational partial = 0;
        for (const auto& row : rows) {
            partial += ratio(1, static_cast<long>(row.r) * row.r);
            CHECK(row.partial_sum == partial);
            CHECK(row.entry == -partial);
            CHECK(row.equal);
        }
    }

    TEST_CASE("(1,5) entries and their differences") {
        std::vector<unsigned> range{2, 3, 4, 5, 6, 7, 8};
        const auto entries = entry_sequence(BasisKind::balanced, 1, 5, range);
        CHECK(entries == parse_all({"1/4", "7/18", "91/192", "1529/2880", "37037/64800",
                                    "54613/90720", "63566689/101606400"}));
        const auto expected = parse_all({"1/4", "5/36", "49/576", "41/720", "5269/129600",
                                         "767/25200", "266681/11289600"});
        Rational previous = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            CHECK(entries[i] - previous == expected[i]);
            previous = entries[i];
        }
        CHECK(entry_sequence(BasisKind::balanced, 1, 5, range, false, 4) == entries);
        CHECK_THROWS_AS(entry_sequence(BasisKind::balanced, 1, 5, {1}), std::out_of_range);
        CHECK_THROWS_AS(entry_sequence(BasisKind::balanced, 0, 1, {1}), std::out_of_range);
    }

    TEST_CASE("unbalanced (1,3) entries grow") {
        std::vector<unsigned> range;
        for (unsigned r = 4; r <= 10; ++r) range.push_back(r);
        const auto entries = entry_sequence(BasisKind::unbalanced, 1, 3, range);
        for (std::size_t i = 1; i < entries.size(); ++i) CHECK(abs(entries[i]) > abs(entries[i - 1]));
    }

    TEST_CASE("solving for t") {
        for (unsigned r = 1; r <= 6; ++r) {
            for (BasisKind kind : {BasisKind::balanced, BasisKind::unbalanced}) {
                const BraidSum b = solve_t(kind, r);
                const std::size_t n = basis_nodes(kind, r).size();
                for (unsigned i = 0; i < n; ++i) {
                    CHECK(kontsevich_component(b, i) == (i == 1 ? 1 : 0));
                }
            }
        }
        const ExactMatrix k = kontsevich_system({0, 2, -2});
        CHECK(k(1, 1) == 1);
        CHECK(k(2, 2) == ratio(1, 2));
        // The balanced solution is antisymmetric, like the tau lift.
        const BraidSum b = solve_t(BasisKind::balanced, 3);
        for (const auto& [n, c] : b.terms()) CHECK(b.coefficient(-n) == -c);
        const auto comparison = compare_with_lift(3);
        for (const auto& row : comparison) {
            CHECK(row.difference == row.basis_coefficient - row.lift_coefficient);
        }
    }
}

#include <braidinv/basis_solver.hpp>
#include <braidinv/inverse_engine.hpp>

#include <algorithm>
#include <future>
#include <set>
#include <utility>

namespace braidinv {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.dim();
    ExactMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

std::vector<Rational> operator*(const ExactMatrix& a, const std::vector<Rational>& v) {
    if (a.dim() != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
    }
    return out;
}

std::vector<Exponent> balanced_nodes(unsigned r) {
    std::vector<Exponent> nodes{0};
    for (Exponent k = 1; k <= static_cast<Exponent>(r); ++k) {
        nodes.push_back(k);
        nodes.push_back(-k);
    }
    return nodes;
}

std::vector<Exponent> unbalanced_nodes(unsigned r) {
    std::vector<Exponent> nodes;
    for (Exponent k = 0; k <= static_cast<Exponent>(r); ++k) nodes.push_back(k);
    return nodes;
}

std::vector<Exponent> basis_nodes(BasisKind kind, unsigned r) {
    return kind == BasisKind::balanced ? balanced_nodes(r) : unbalanced_nodes(r);
}

ExactMatrix power_matrix(const std::vector<Exponent>& nodes, bool with_factorials) {
    const std::size_t n = nodes.size();
    ExactMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational value = 1;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = with_factorials ? Rational(value / factorial(static_cast<unsigned>(i))) : value;
            value *= static_cast<long>(nodes[j]);
        }
    }
    return m;
}

ExactMatrix build_balanced(unsigned r, bool with_factorials) {
    return power_matrix(balanced_nodes(r), with_factorials);
}

ExactMatrix build_unbalanced(unsigned r, bool with_factorials) {
    return power_matrix(unbalanced_nodes(r), with_factorials);
}

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Scales row i by the lcm of its denominators; returns the integer rows
// and the scale factors (M' = diag(scale) * M).
std::pair<IntegerMatrix, std::vector<Integer>> clear_denominators(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    IntegerMatrix rows(n, std::vector<Integer>(n));
    std::vector<Integer> scale(n, Integer(1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = m(i, j).get_num() * (scale[i] / m(i, j).get_den());
        }
    }
    return {std::move(rows), std::move(scale)};
}

struct Elimination {
    IntegerMatrix upper;    // n x (n + extra)
    Integer last_pivot;     // determinant of the integer matrix, up to sign
    int sign = 1;
};

// Bareiss forward elimination on [A | B]. Every division is exact.
Elimination bareiss_forward(IntegerMatrix a, std::size_t n) {
    Elimination out;
    const std::size_t width = a.front().size();
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && a[pivot_row][k] == 0) ++pivot_row;
        if (pivot_row == n) throw SingularMatrixError("matrix is singular");
        if (pivot_row != k) {
            std::swap(a[pivot_row], a[k]);
            out.sign = -out.sign;
        }
        const Integer& pivot = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                Integer v = pivot * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }
    out.last_pivot = prev;
    out.upper = std::move(a);
    return out;
}

} // namespace

Rational determinant(const ExactMatrix& m) {
    auto [rows, scale] = clear_denominators(m);
    Elimination e;
    try {
        e = bareiss_forward(std::move(rows), m.dim());
    } catch (const SingularMatrixError&) {
        return 0;
    }
    Rational det(e.last_pivot * e.sign);
    for (const Integer& s : scale) det /= s;
    return det;
}

ExactMatrix invert(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    auto [rows, scale] = clear_denominators(m);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(2 * n);
        rows[i][n + i] = 1;
    }
    const Elimination e = bareiss_forward(std::move(rows), n);

    // Back substitution on the triangular system, one right-hand column at a time.
    ExactMatrix x(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = n; i-- > 0;) {
            Rational sum(e.upper[i][n + col]);
            for (std::size_t j = i + 1; j < n; ++j) sum -= e.upper[i][j] * x(j, col);
            x(i, col) = sum / e.upper[i][i];
        }
    }
    // M' = D M, so M^-1 = M'^-1 D.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) x(i, j) *= scale[j];
    }
    if (m * x != ExactMatrix::identity(n)) {
        throw std::logic_error("invert: M * N != I after elimination");
    }
    return x;
}

std::vector<Rational> entry_sequence(BasisKind kind, std::size_t row, std::size_t col,
                                     const std::vector<unsigned>& r_range, bool with_factorials,
                                     unsigned jobs) {
    if (row == 0 || col == 0) throw std::out_of_range("entry indices are 1-based");
    for (unsigned r : r_range) {
        const std::size_t dim = basis_nodes(kind, r).size();
        if (row > dim || col > dim) {
            throw std::out_of_range("entry (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") outside " + std::to_string(dim) + "x" + std::to_string(dim) +
                                    " matrix at r=" + std::to_string(r));
        }
    }
    std::vector<Rational> out(r_range.size());
    const auto compute = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < r_range.size(); i += stride) {
            const auto m = power_matrix(basis_nodes(kind, r_range[i]), with_factorials);
            out[i] = invert(m)(row - 1, col - 1);
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(r_range.size(), 1));
    std::vector<std::future<void>> pending;
    for (std::size_t w = 1; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, compute, w, workers));
    }
    compute(0, workers);
    for (auto& f : pending) f.get();
    return out;
}

std::vector<Zeta2Row> zeta2_check(unsigned r_max) {
    std::vector<unsigned> range;
    for (unsigned r = 1; r <= r_max; ++r) range.push_back(r);
    const auto entries = entry_sequence(BasisKind::balanced, 1, 3, range);
    std::vector<Zeta2Row> rows;
    Rational partial;
    for (unsigned r = 1; r <= r_max; ++r) {
        partial += Rational(1, r * r);
        Zeta2Row row{r, entries[r - 1], partial, -entries[r - 1] == partial};
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix kontsevich_system(const std::vector<Exponent>& nodes) {
    const std::size_t n = nodes.size();
    ExactMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Rational half = ratio(static_cast<long>(nodes[j]), 2);
        Rational value = 1;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = value;
            // (x/2)^{i+1} / (i+1)! from (x/2)^i / i!
            value *= half / static_cast<unsigned long>(i + 1);
        }
    }
    return m;
}

BraidSum solve_t(BasisKind kind, unsigned r) {
    const auto nodes = basis_nodes(kind, r);
    if (nodes.size() < 2) throw std::invalid_argument("solve_t needs r >= 1");
    std::vector<Rational> target(nodes.size());
    target[1] = 1;
    const auto weights = invert(kontsevich_system(nodes)) * target;
    BraidSum out;
    for (std::size_t j = 0; j < nodes.size(); ++j) out += BraidSum::monomial(nodes[j], weights[j]);
    return out;
}

std::vector<SolutionComparison> compare_with_lift(unsigned r) {
    const BraidSum basis = solve_t(BasisKind::balanced, r);
    const BraidSum lift = evaluate(strengthen_to(BraidSum::tau(), 2 * r - 1));
    std::set<Exponent> exponents;
    for (const auto& [n, c] : basis.terms()) exponents.insert(n);
    for (const auto& [n, c] : lift.terms()) exponents.insert(n);
    std::vector<SolutionComparison> rows;
    for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
        SolutionComparison row;
        row.exponent = *it;
        row.basis_coefficient = basis.coefficient(*it);
        row.lift_coefficient = lift.coefficient(*it);
        row.difference = row.basis_coefficient - row.lift_coefficient;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace braidinv

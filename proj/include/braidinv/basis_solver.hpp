#ifndef BRAIDINV_BASIS_SOLVER_HPP
#define BRAIDINV_BASIS_SOLVER_HPP

#include <braidinv/braid_sum.hpp>
#include <braidinv/rational.hpp>

#include <stdexcept>
#include <vector>

namespace braidinv {

class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim = 1);
    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
std::vector<Rational> operator*(const ExactMatrix& a, const std::vector<Rational>& v);

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class BasisKind { balanced, unbalanced };

// 0, 1, -1, 2, -2, ..., r, -r
std::vector<Exponent> balanced_nodes(unsigned r);
// 0, 1, ..., r
std::vector<Exponent> unbalanced_nodes(unsigned r);
std::vector<Exponent> basis_nodes(BasisKind kind, unsigned r);

// Row i holds node^i (0^0 = 1). With factorials, row i is divided by i!.
ExactMatrix power_matrix(const std::vector<Exponent>& nodes, bool with_factorials = false);
ExactMatrix build_balanced(unsigned r, bool with_factorials = false);
ExactMatrix build_unbalanced(unsigned r, bool with_factorials = false);

// Fraction-free (Bareiss) elimination; the result is checked against
// M * N = I. Throws SingularMatrixError for singular input.
ExactMatrix invert(const ExactMatrix& m);
Rational determinant(const ExactMatrix& m);

// 1-based (row, col) entry of invert(build(r)) for each r. Throws
// std::out_of_range if the index exceeds the dimension for some r.
std::vector<Rational> entry_sequence(BasisKind kind, std::size_t row, std::size_t col,
                                     const std::vector<unsigned>& r_range,
                                     bool with_factorials = false, unsigned jobs = 1);

struct Zeta2Row {
    unsigned r = 0;
    Rational entry;
    Rational partial_sum;
    bool equal = false;
};

// Compares -N_r(1,3) with sum_{k<=r} 1/k^2 for r = 1..r_max.
std::vector<Zeta2Row> zeta2_check(unsigned r_max);

// Entries Z_i(q^node) = (node/2)^i / i! for i = 0..nodes.size()-1.
ExactMatrix kontsevich_system(const std::vector<Exponent>& nodes);

// Sum of basis braids whose Z_i equal the target t (Z_1 = 1, all other
// Z_i = 0 for i < nodes.size()).
BraidSum solve_t(BasisKind kind, unsigned r);

struct SolutionComparison {
    Exponent exponent = 0;
    Rational basis_coefficient;
    Rational lift_coefficient;
    Rational difference;
};

// Coefficientwise comparison of solve_t(balanced, r) with the tau-seeded
// strong lift truncated at order 2r - 1.
std::vector<SolutionComparison> compare_with_lift(unsigned r);

} // namespace braidinv

#endif // BRAIDINV_BASIS_SOLVER_HPP

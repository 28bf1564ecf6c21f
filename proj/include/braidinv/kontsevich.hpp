#ifndef BRAIDINV_KONTSEVICH_HPP
#define BRAIDINV_KONTSEVICH_HPP

#include <braidinv/braid_sum.hpp>
#include <braidinv/series.hpp>

#include <vector>

namespace braidinv {

// Coordinate of Z_i(b) in the one-dimensional value space A_{2,i},
// using t^i as basis.
struct GradedValue {
    unsigned order = 0;
    Rational value;

    friend bool operator==(const GradedValue&, const GradedValue&) = default;
};

// Kontsevich integral on B2: q^n maps to e^{n t / 2}, extended linearly.
Series kontsevich(const BraidSum& b, unsigned order);

// Z_i(b) = sum_n b_n (n/2)^i / i!
Rational kontsevich_component(const BraidSum& b, unsigned i);

// (j, Z_j(b)) with j the filtration order of b. Throws std::invalid_argument
// on the zero sum.
GradedValue residue(const BraidSum& b);

// [(j, Z_j(b)) for j = 0..jmax]
std::vector<GradedValue> focus_profile(const BraidSum& b, unsigned jmax);

// True when every profile entry other than `r` vanishes.
bool is_focussed(const std::vector<GradedValue>& profile, unsigned r);

} // namespace braidinv

#endif // BRAIDINV_KONTSEVICH_HPP

#include <braidinv/kontsevich.hpp>

#include <stdexcept>

namespace braidinv {

Series kontsevich(const BraidSum& b, unsigned order) {
    Series z(order);
    for (const auto& [n, c] : b.terms()) {
        z += exp_scaled(ratio(static_cast<long>(n), 2), order) * c;
    }
    return z;
}

Rational kontsevich_component(const BraidSum& b, unsigned i) {
    Rational sum;
    for (const auto& [n, c] : b.terms()) {
        sum += c * power(ratio(static_cast<long>(n), 2), i);
    }
    return sum / factorial(i);
}

GradedValue residue(const BraidSum& b) {
    if (b.is_zero()) throw std::invalid_argument("residue of the zero sum is undefined");
    const auto j = static_cast<unsigned>(filtration_order(b));
    return {j, kontsevich_component(b, j)};
}

std::vector<GradedValue> focus_profile(const BraidSum& b, unsigned jmax) {
    std::vector<GradedValue> out;
    out.reserve(jmax + 1);
    for (unsigned j = 0; j <= jmax; ++j) out.push_back({j, kontsevich_component(b, j)});
    return out;
}

bool is_focussed(const std::vector<GradedValue>& profile, unsigned r) {
    for (const auto& entry : profile) {
        if (entry.order != r && entry.value != 0) return false;
    }
    return true;
}

} // namespace braidinv

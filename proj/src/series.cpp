#include <braidinv/series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidinv {

Series::Series(unsigned order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::variable(unsigned order) {
    if (order < 1) throw std::invalid_argument("t needs truncation order >= 1");
    Series s(order);
    s.coeffs_[1] = 1;
    return s;
}

Series Series::constant(const Rational& c, unsigned order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Rational Series::operator[](unsigned degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

void Series::set(unsigned degree, const Rational& value) {
    if (degree >= coeffs_.size()) throw std::out_of_range("degree beyond truncation order");
    coeffs_[degree] = value;
}

Series Series::truncated(unsigned new_order) const {
    Series out(new_order);
    const unsigned n = std::min(new_order, order());
    std::copy_n(coeffs_.begin(), n + 1, out.coeffs_.begin());
    return out;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series& Series::operator+=(const Series& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Series operator+(const Series& a, const Series& b) {
    Series out = a;
    return out += b;
}

Series operator-(const Series& a, const Series& b) {
    Series out = a;
    return out -= b;
}

Series operator*(const Series& a, const Series& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (unsigned j = 0; i + j <= n; ++j) {
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return Series(std::move(out));
}

Series operator*(Series a, const Rational& c) { return a *= c; }
Series operator*(const Rational& c, Series a) { return a *= c; }

Series add(const Series& a, const Series& b) { return a + b; }
Series mul(const Series& a, const Series& b) { return a * b; }
Series scale(const Series& a, const Rational& c) { return a * c; }

Series exp_scaled(const Rational& c, unsigned order) {
    Series s(order);
    Rational term = 1;
    for (unsigned i = 0; i <= order; ++i) {
        if (i > 0) term *= c / i;
        s.set(i, term);
    }
    return s;
}

Series two_sinh_half(unsigned order) {
    return exp_scaled(ratio(1, 2), order) - exp_scaled(ratio(-1, 2), order);
}

Series compose(const Series& outer, const Series& inner) {
    if (inner[0] != 0) {
        throw std::invalid_argument("compose: inner series has nonzero constant term");
    }
    const unsigned n = std::min(outer.order(), inner.order());
    const Series x = inner.truncated(n);
    // Horner from the top degree; each multiply by x raises valuation.
    Series acc = Series::constant(outer[n], n);
    for (unsigned k = n; k-- > 0;) {
        acc = acc * x;
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

Series revert(const Series& s) {
    if (s[0] != 0) throw std::invalid_argument("revert: series has nonzero constant term");
    if (s[1] == 0) throw std::invalid_argument("revert: series has zero linear coefficient");
    const unsigned n = s.order();
    Series r(n);
    if (n == 0) return r;
    const Rational lead = s[1];
    r.set(1, 1 / lead);
    // compose(r, s)[k] = r_k * lead^k + (terms in r_1..r_{k-1}); solve for r_k.
    Rational lead_pow = lead;
    for (unsigned k = 2; k <= n; ++k) {
        lead_pow *= lead;
        const Rational off = compose(r.truncated(k), s.truncated(k))[k];
        r.set(k, -off / lead_pow);
    }
    return r;
}

Series arcsinh2_closed_form(unsigned order) {
    // arcsinh(x) = sum_k (-1)^k (2k)! / (4^k (k!)^2 (2k+1)) x^{2k+1};
    // substituting x/2 and doubling divides the k-th term by 4^k.
    Series s(order);
    for (unsigned k = 0; 2 * k + 1 <= order; ++k) {
        Integer den = factorial(k);
        den *= den;
        den *= 2 * k + 1;
        Integer four_k;
        mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
        den *= four_k;
        den *= four_k;
        Rational c(factorial(2 * k), den);
        c.canonicalize();
        if (k % 2 == 1) c = -c;
        s.set(2 * k + 1, c);
    }
    return s;
}

std::string to_string(const Series& s) {
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 0; i <= s.order(); ++i) {
        const Rational& c = s.coeffs()[i];
        if (c == 0) continue;
        if (!first) out << " + ";
        out << to_string(c);
        if (i == 1) out << "*t";
        if (i > 1) out << "*t^" << i;
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^" << s.order() + 1 << ")";
    return out.str();
}

} // namespace braidinv

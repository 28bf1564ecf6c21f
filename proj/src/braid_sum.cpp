#include <braidinv/braid_sum.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace braidinv {

BraidSum::BraidSum(Terms terms) {
    for (auto& [n, c] : terms) add_term(n, c);
}

BraidSum BraidSum::identity() { return monomial(0); }

BraidSum BraidSum::monomial(Exponent n, const Rational& c) {
    BraidSum out;
    out.add_term(n, c);
    return out;
}

BraidSum BraidSum::tau() { return pair(1); }

BraidSum BraidSum::pair(Exponent n) {
    BraidSum out;
    out.add_term(n, 1);
    out.add_term(-n, -1);
    return out;
}

Rational BraidSum::coefficient(Exponent n) const {
    const auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
}

Exponent BraidSum::min_exponent() const {
    if (is_zero()) throw std::domain_error("zero braid sum has no exponents");
    return terms_.begin()->first;
}

Exponent BraidSum::max_exponent() const {
    if (is_zero()) throw std::domain_error("zero braid sum has no exponents");
    return terms_.rbegin()->first;
}

void BraidSum::add_term(Exponent n, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BraidSum& BraidSum::operator+=(const BraidSum& other) {
    for (const auto& [n, c] : other.terms_) add_term(n, c);
    return *this;
}

BraidSum& BraidSum::operator-=(const BraidSum& other) {
    for (const auto& [n, c] : other.terms_) add_term(n, -c);
    return *this;
}

BraidSum& BraidSum::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [n, c] : terms_) c *= scalar;
    return *this;
}

BraidSum operator+(BraidSum a, const BraidSum& b) { return a += b; }
BraidSum operator-(BraidSum a, const BraidSum& b) { return a -= b; }
BraidSum operator-(BraidSum a) { return a *= Rational(-1); }
BraidSum operator*(BraidSum a, const Rational& c) { return a *= c; }
BraidSum operator*(const Rational& c, BraidSum a) { return a *= c; }
BraidSum operator*(const BraidSum& a, const BraidSum& b) { return multiply(a, b); }

BraidSum combine(const BraidSum& a, const Rational& ca, const BraidSum& b, const Rational& cb) {
    return a * ca + b * cb;
}

BraidSum multiply(const BraidSum& a, const BraidSum& b) {
    BraidSum::Terms acc;
    for (const auto& [i, ai] : a.terms()) {
        for (const auto& [j, bj] : b.terms()) {
            acc[i + j] += ai * bj;
        }
    }
    return BraidSum(std::move(acc));
}

BraidSum power(const BraidSum& base, unsigned k) {
    BraidSum out = BraidSum::identity();
    for (unsigned i = 0; i < k; ++i) out = multiply(out, base);
    return out;
}

BraidSum tau_power(unsigned k) { return power(BraidSum::tau(), k); }

Rational moment(const BraidSum& b, unsigned i) {
    Rational sum;
    Integer n_pow;
    for (const auto& [n, c] : b.terms()) {
        const Integer base(static_cast<long>(n));
        mpz_pow_ui(n_pow.get_mpz_t(), base.get_mpz_t(), i);
        sum += c * n_pow;
    }
    return sum;
}

int filtration_order_by_moments(const BraidSum& b) {
    if (b.is_zero()) return kInfiniteOrder;
    // A nonzero polynomial of degree d has root multiplicity at most d.
    const Exponent width = b.max_exponent() - b.min_exponent();
    int j = 0;
    while (j <= width && moment(b, static_cast<unsigned>(j)) == 0) ++j;
    return j;
}

int filtration_order_by_division(const BraidSum& b) {
    if (b.is_zero()) return kInfiniteOrder;
    const Exponent lo = b.min_exponent();
    std::vector<Rational> coeffs(static_cast<std::size_t>(b.max_exponent() - lo + 1));
    for (const auto& [n, c] : b.terms()) coeffs[static_cast<std::size_t>(n - lo)] = c;

    int order = 0;
    while (coeffs.size() > 1) {
        // Synthetic division by (x - 1), highest degree first.
        std::vector<Rational> quotient(coeffs.size() - 1);
        Rational carry;
        for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
            carry += coeffs[k];
            quotient[k - 1] = carry;
        }
        const Rational remainder = carry + coeffs[0];
        if (remainder != 0) break;
        coeffs = std::move(quotient);
        ++order;
    }
    return order;
}

int filtration_order(const BraidSum& b) {
    const int by_moments = filtration_order_by_moments(b);
    const int by_division = filtration_order_by_division(b);
    if (by_moments != by_division) {
        throw std::logic_error("filtration order mismatch for " + to_string(b));
    }
    return by_moments;
}

std::string to_string(const BraidSum& b) {
    if (b.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
        if (!first) out << " + ";
        out << to_string(it->second) << "*q^" << it->first;
        first = false;
    }
    return out.str();
}

namespace {

Exponent parse_exponent(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("missing exponent in '" + std::string(whole) + "'");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("missing exponent in '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw std::invalid_argument("bad exponent '" + std::string(s) + "' in '" +
                                        std::string(whole) + "'");
        }
    }
    try {
        return std::stoll(std::string(s));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("exponent out of range: '" + std::string(s) + "'");
    }
}

BraidSum parse_atom(std::string_view atom, std::string_view whole) {
    if (atom == "e" || atom == "1") return BraidSum::identity();
    if (atom == "q") return BraidSum::q();
    if (atom == "p") return BraidSum::p();
    if (atom == "tau") return BraidSum::tau();
    if (atom.size() > 2 && atom.front() == '<' && atom.back() == '>') {
        return BraidSum::pair(parse_exponent(atom.substr(1, atom.size() - 2), whole));
    }
    const auto caret = atom.find('^');
    if (caret != std::string_view::npos) {
        const std::string_view base = atom.substr(0, caret);
        const Exponent k = parse_exponent(atom.substr(caret + 1), whole);
        if (base == "q") return BraidSum::monomial(k);
        if (base == "p") return BraidSum::monomial(-k);
        if (base == "tau") {
            if (k < 0) throw std::invalid_argument("tau power must be nonnegative");
            return tau_power(static_cast<unsigned>(k));
        }
    }
    throw std::invalid_argument("unknown braid term '" + std::string(atom) + "' in '" +
                                std::string(whole) + "'");
}

bool starts_numeric(std::string_view s) {
    return !s.empty() && std::isdigit(static_cast<unsigned char>(s.front()));
}

BraidSum parse_term(std::string_view term, std::string_view whole) {
    Rational sign = 1;
    while (!term.empty() && (term.front() == '-' || term.front() == '+')) {
        if (term.front() == '-') sign = -sign;
        term.remove_prefix(1);
    }
    if (term.empty()) throw std::invalid_argument("empty term in '" + std::string(whole) + "'");
    const auto star = term.find('*');
    if (star != std::string_view::npos) {
        return parse_atom(term.substr(star + 1), whole) *
               (sign * parse_rational(term.substr(0, star)));
    }
    if (starts_numeric(term)) {
        return BraidSum::identity() * (sign * parse_rational(term));
    }
    return parse_atom(term, whole) * sign;
}

} // namespace

BraidSum parse_braid_sum(std::string_view text) {
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    }
    if (compact.empty()) throw std::invalid_argument("empty braid sum");
    if (compact == "0") return {};

    // Split on '+' and binary '-'; a sign directly after '^', '*', '/', '<'
    // or another sign belongs to the following token.
    BraidSum out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= compact.size(); ++i) {
        const bool at_end = i == compact.size();
        if (!at_end) {
            const char ch = compact[i];
            const char prev = compact[i - 1];
            const bool separator = (ch == '+' || ch == '-') && prev != '^' && prev != '*' &&
                                   prev != '/' && prev != '<' && prev != '+' && prev != '-';
            if (!separator) continue;
        }
        out += parse_term(std::string_view(compact).substr(start, i - start), text);
        start = i;
        if (!at_end && compact[i] == '+') start = i + 1;
    }
    return out;
}

} // namespace braidinv

#include <braidinv/convergence.hpp>
#include <braidinv/inverse_engine.hpp>
#include <braidinv/kontsevich.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace braidinv {

BraidSumSequence tauhat_truncations(unsigned length) {
    BraidSumSequence seq{{}, "tauhat"};
    if (length == 0) return seq;
    const LiftPoly full = strengthen_to(BraidSum::tau(), 2 * length - 1);
    for (unsigned i = 1; i <= length; ++i) seq.items.push_back(evaluate(full.truncated(2 * i - 1)));
    return seq;
}

BraidSumSequence pi_tauhat_partial_sums(unsigned length) {
    BraidSumSequence seq{{}, "pi-tauhat"};
    BraidSum partial;
    for (unsigned m = 0; m < length; ++m) {
        const long n = 2 * static_cast<long>(m) + 1;
        const Rational c = ratio(m % 2 == 0 ? 4 : -4, n * n);
        partial += BraidSum::pair(n) * c;
        seq.items.push_back(partial);
    }
    return seq;
}

BraidSumSequence alternating_harmonic(unsigned length) {
    BraidSumSequence seq{{}, "harmonic"};
    Rational partial;
    for (unsigned m = 1; m <= length; ++m) {
        partial += ratio(m % 2 == 1 ? 1 : -1, m);
        seq.items.push_back(BraidSum::q() * partial);
    }
    return seq;
}

BraidSumSequence constant_sequence(const BraidSum& b, unsigned length) {
    return {std::vector<BraidSum>(length, b), "constant"};
}

namespace {

BraidSum parse_term_map(const nlohmann::json& item) {
    if (!item.is_object()) throw std::invalid_argument("sequence item must be a JSON object");
    BraidSum out;
    for (const auto& [key, value] : item.items()) {
        Exponent n = 0;
        try {
            std::size_t used = 0;
            n = std::stoll(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent key '" + key + "'");
        }
        if (value.is_string()) {
            out += BraidSum::monomial(n, parse_rational(value.get<std::string>()));
        } else if (value.is_number_integer()) {
            out += BraidSum::monomial(n, Rational(value.get<long>()));
        } else {
            throw std::invalid_argument("coefficient for '" + key + "' must be a string or integer");
        }
    }
    return out;
}

} // namespace

BraidSumSequence parse_sequence_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("sequence JSON: ") + e.what());
    }
    BraidSumSequence seq{{}, "file"};
    const nlohmann::json* items = &doc;
    if (doc.is_object()) {
        if (!doc.contains("items")) throw std::invalid_argument("sequence JSON object lacks 'items'");
        items = &doc["items"];
        if (doc.contains("label") && doc["label"].is_string()) seq.label = doc["label"].get<std::string>();
    }
    if (!items->is_array()) throw std::invalid_argument("sequence items must be a JSON array");
    for (const auto& item : *items) seq.items.push_back(parse_term_map(item));
    return seq;
}

std::string sequence_to_json(const BraidSumSequence& seq) {
    nlohmann::ordered_json doc;
    doc["label"] = seq.label;
    doc["items"] = nlohmann::ordered_json::array();
    for (const auto& b : seq.items) {
        nlohmann::ordered_json item = nlohmann::ordered_json::object();
        for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
            item[std::to_string(it->first)] = to_string(it->second);
        }
        doc["items"].push_back(std::move(item));
    }
    return doc.dump(2);
}

BraidSumSequence operator+(const BraidSumSequence& a, const BraidSumSequence& b) {
    BraidSumSequence out{{}, a.label + "+" + b.label};
    const std::size_t n = std::min(a.items.size(), b.items.size());
    for (std::size_t i = 0; i < n; ++i) out.items.push_back(a.items[i] + b.items[i]);
    return out;
}

std::vector<Rational> coefficient_trace(const BraidSumSequence& seq, Exponent n) {
    std::vector<Rational> out;
    out.reserve(seq.items.size());
    for (const auto& b : seq.items) out.push_back(b.coefficient(n));
    return out;
}

std::vector<Rational> z_trace(const BraidSumSequence& seq, unsigned j) {
    std::vector<Rational> out;
    out.reserve(seq.items.size());
    for (const auto& b : seq.items) out.push_back(kontsevich_component(b, j));
    return out;
}

ConditionCResult filtration_condition_c(const BraidSumSequence& seq, std::size_t window) {
    ConditionCResult result;
    result.window = window == 0 ? seq.items.size() : std::min(window, seq.items.size());
    for (std::size_t i = 1; i <= result.window; ++i) {
        for (std::size_t j = i + 1; j <= result.window; ++j) {
            ++result.pairs_checked;
            const int order = filtration_order(seq.items[i - 1] - seq.items[j - 1]);
            if (order < static_cast<int>(i)) {
                result.first_violation = ConditionCViolation{i, j, order};
                return result;
            }
        }
    }
    return result;
}

TraceBehaviour classify_trace(const std::vector<Rational>& trace) {
    const std::size_t w = trace.size();
    if (w <= 1) return TraceBehaviour::eventually_constant;
    const std::size_t half = w / 2;
    if (std::all_of(trace.begin() + static_cast<std::ptrdiff_t>(half), trace.end(),
                    [&](const Rational& v) { return v == trace.back(); })) {
        return TraceBehaviour::eventually_constant;
    }
    const auto onset = static_cast<std::size_t>(
        std::find_if(trace.begin(), trace.end(), [](const Rational& v) { return v != 0; }) -
        trace.begin());

    std::vector<Rational> steps;
    for (std::size_t k = onset; k + 1 < w; ++k) steps.push_back(abs(trace[k + 1] - trace[k]));
    if (steps.size() < 2) return TraceBehaviour::undetermined;

    // Last occurrence of the largest increment.
    std::size_t peak = 0;
    for (std::size_t k = 1; k < steps.size(); ++k) {
        if (steps[k] >= steps[peak]) peak = k;
    }
    for (std::size_t k = peak; k + 1 < steps.size(); ++k) {
        if (steps[k + 1] > steps[k]) return TraceBehaviour::not_settling;
    }
    if (peak + 1 == steps.size()) {
        // Still growing, or stuck at a constant step size.
        const bool flat = std::all_of(steps.begin(), steps.end(),
                                      [&](const Rational& s) { return s == steps.back(); });
        return flat ? TraceBehaviour::not_settling : TraceBehaviour::undetermined;
    }
    return TraceBehaviour::contracting;
}

std::string to_string(TraceBehaviour behaviour) {
    switch (behaviour) {
        case TraceBehaviour::eventually_constant: return "eventually-constant";
        case TraceBehaviour::contracting: return "contracting";
        case TraceBehaviour::undetermined: return "undetermined";
        case TraceBehaviour::not_settling: return "not-settling";
    }
    return "unknown";
}

namespace {

bool all_settle(const std::vector<TraceVerdict>& traces) {
    return std::none_of(traces.begin(), traces.end(), [](const TraceVerdict& v) {
        return v.behaviour == TraceBehaviour::not_settling;
    });
}

} // namespace

bool BiconvergenceReport::condition_a() const { return all_settle(coefficient_traces); }
bool BiconvergenceReport::condition_b() const { return all_settle(z_traces); }

BiconvergenceReport biconvergence_report(const BraidSumSequence& seq, unsigned jmax,
                                         std::size_t window) {
    BiconvergenceReport report;
    report.label = seq.label;
    report.window = window == 0 ? seq.items.size() : std::min(window, seq.items.size());
    BraidSumSequence windowed{
        {seq.items.begin(), seq.items.begin() + static_cast<std::ptrdiff_t>(report.window)},
        seq.label};

    std::set<Exponent> exponents;
    for (const auto& b : windowed.items) {
        for (const auto& [n, c] : b.terms()) exponents.insert(n);
    }
    for (Exponent n : exponents) {
        TraceVerdict v;
        v.key = n;
        v.trace = coefficient_trace(windowed, n);
        v.behaviour = classify_trace(v.trace);
        report.coefficient_traces.push_back(std::move(v));
    }
    for (unsigned j = 0; j <= jmax; ++j) {
        TraceVerdict v;
        v.key = j;
        v.trace = z_trace(windowed, j);
        v.behaviour = classify_trace(v.trace);
        report.z_traces.push_back(std::move(v));
    }
    report.condition_c = filtration_condition_c(windowed);
    return report;
}

AdditivityResult additivity_check(const BraidSumSequence& b, const BraidSumSequence& c,
                                  unsigned jmax) {
    AdditivityResult result;
    const BraidSumSequence sum = b + c;
    const std::size_t n = sum.items.size();
    std::set<Exponent> exponents;
    for (const auto* seq : {&b, &c}) {
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [e, coeff] : seq->items[i].terms()) exponents.insert(e);
        }
    }
    for (Exponent e : exponents) {
        const auto tb = coefficient_trace(b, e);
        const auto tc = coefficient_trace(c, e);
        const auto ts = coefficient_trace(sum, e);
        for (std::size_t i = 0; i < n; ++i) {
            if (ts[i] != tb[i] + tc[i]) result.coefficients_add = false;
        }
        ++result.exponents_checked;
    }
    for (unsigned j = 0; j <= jmax; ++j) {
        const auto zb = z_trace(b, j);
        const auto zc = z_trace(c, j);
        const auto zs = z_trace(sum, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (zs[i] != zb[i] + zc[i]) result.z_values_add = false;
        }
        ++result.orders_checked;
    }
    return result;
}

} // namespace braidinv

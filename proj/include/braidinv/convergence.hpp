#ifndef BRAIDINV_CONVERGENCE_HPP
#define BRAIDINV_CONVERGENCE_HPP

#include <braidinv/braid_sum.hpp>

#include <optional>
#include <string>
#include <vector>

namespace braidinv {

// b_1, b_2, ... of finite braid sums. Indices in diagnostics are 1-based.
struct BraidSumSequence {
    std::vector<BraidSum> items;
    std::string label;
};

// b_i = P_{2i-1}(tau), the truncations of the tau-seeded strong lift.
BraidSumSequence tauhat_truncations(unsigned length);
// b_i = 4 sum_{m<i} (-1)^m <2m+1> / (2m+1)^2, i.e. pi times the partial
// sums of tauhat written in pairs.
BraidSumSequence pi_tauhat_partial_sums(unsigned length);
// b_i = (sum_{m<=i} (-1)^{m+1} / m) q
BraidSumSequence alternating_harmonic(unsigned length);
BraidSumSequence constant_sequence(const BraidSum& b, unsigned length);

// Parses either a JSON array of term maps or {"label": ..., "items": [...]},
// where a term map is {"<exponent>": "<rational>", ...}. Throws
// std::invalid_argument on malformed input.
BraidSumSequence parse_sequence_json(const std::string& text);
std::string sequence_to_json(const BraidSumSequence& seq);

// Elementwise sum over the common prefix.
BraidSumSequence operator+(const BraidSumSequence& a, const BraidSumSequence& b);

std::vector<Rational> coefficient_trace(const BraidSumSequence& seq, Exponent n);
std::vector<Rational> z_trace(const BraidSumSequence& seq, unsigned j);

struct ConditionCViolation {
    std::size_t i = 0;
    std::size_t j = 0;
    int order = 0;
};

struct ConditionCResult {
    std::size_t window = 0;
    std::size_t pairs_checked = 0;
    std::optional<ConditionCViolation> first_violation;

    bool satisfied() const { return !first_violation.has_value(); }
};

// For 1 <= i < j <= window: filtration_order(b_i - b_j) >= i.
// window = 0 means the whole sequence.
ConditionCResult filtration_condition_c(const BraidSumSequence& seq, std::size_t window = 0);

/*
 * Shape of a trace over the window, judged on its increments after the
 * first nonzero entry:
 *   eventually_constant  constant over the second half of the window
 *   contracting          increments peaked and have shrunk monotonically since
 *   undetermined         increments still growing at the window end, or too
 *                        few entries after onset; no verdict either way
 *   not_settling         increments re-grow after their peak, or stay at a
 *                        constant nonzero size
 */
enum class TraceBehaviour {
    eventually_constant,
    contracting,
    undetermined,
    not_settling,
};

TraceBehaviour classify_trace(const std::vector<Rational>& trace);
std::string to_string(TraceBehaviour behaviour);

struct TraceVerdict {
    long long key = 0;   // exponent for (a), order j for (b)
    std::vector<Rational> trace;
    TraceBehaviour behaviour = TraceBehaviour::not_settling;
};

/*
 * Finite-window evidence for biconvergence: (a) every coefficient trace
 * settles, (b) every Z_j trace settles for j <= jmax, (c) the filtration
 * condition holds. Verdicts are evidence over the window, never a proof
 * of convergence.
 */
struct BiconvergenceReport {
    std::string label;
    std::size_t window = 0;
    std::vector<TraceVerdict> coefficient_traces;
    std::vector<TraceVerdict> z_traces;
    ConditionCResult condition_c;

    bool condition_a() const;
    bool condition_b() const;
};

BiconvergenceReport biconvergence_report(const BraidSumSequence& seq, unsigned jmax,
                                         std::size_t window);

// Checks that coefficient and Z traces of (b + c) are the elementwise sums
// of those of b and c, over every exponent present and j <= jmax.
struct AdditivityResult {
    std::size_t exponents_checked = 0;
    std::size_t orders_checked = 0;
    bool coefficients_add = true;
    bool z_values_add = true;
};

AdditivityResult additivity_check(const BraidSumSequence& b, const BraidSumSequence& c,
                                  unsigned jmax);

} // namespace braidinv

#endif // BRAIDINV_CONVERGENCE_HPP

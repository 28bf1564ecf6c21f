#include <braidinv/basis_solver.hpp>
#include <braidinv/cli.hpp>
#include <braidinv/convergence.hpp>
#include <braidinv/inverse_engine.hpp>
#include <braidinv/kontsevich.hpp>
#include <braidinv/precision.hpp>
#include <braidinv/regularization.hpp>
#include <braidinv/reproduce.hpp>
#include <braidinv/table.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace braidinv;

// Rationals cross the boundary as canonical "p/q" strings; the Python
// package turns them into fractions.Fraction.

namespace {

std::vector<std::string> series_cells(const Series& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(to_string(c));
    return out;
}

std::map<unsigned, std::string> lift_cells(const LiftPoly& lift) {
    std::map<unsigned, std::string> out;
    for (const auto& [k, c] : lift.coeffs) out.emplace(k, to_string(c));
    return out;
}

std::vector<std::vector<std::string>> matrix_cells(const ExactMatrix& m) {
    std::vector<std::vector<std::string>> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out[i].push_back(to_string(m(i, j)));
    }
    return out;
}

BasisKind basis_kind(const std::string& name) {
    if (name == "balanced") return BasisKind::balanced;
    if (name == "unbalanced") return BasisKind::unbalanced;
    throw std::invalid_argument("basis kind must be 'balanced' or 'unbalanced'");
}

py::dict condition_c_dict(const ConditionCResult& r) {
    py::dict d;
    d["window"] = r.window;
    d["pairs_checked"] = r.pairs_checked;
    d["satisfied"] = r.satisfied();
    if (r.first_violation) {
        const int order = r.first_violation->order;
        d["first_violation"] = py::make_tuple(r.first_violation->i, r.first_violation->j,
                                              order == kInfiniteOrder ? py::object(py::none())
                                                                      : py::object(py::int_(order)));
    } else {
        d["first_violation"] = py::none();
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_braidinv, m) {
    m.doc() = "Exact inverse of the Kontsevich integral on the two-strand braid group";

    m.def("canonical_braid_sum", [](const std::string& text) { return to_string(parse_braid_sum(text)); },
          py::arg("braid"));
    m.def(
        "filtration_order",
        [](const std::string& braid) -> py::object {
            const int j = filtration_order(parse_braid_sum(braid));
            if (j == kInfiniteOrder) return py::none();
            return py::int_(j);
        },
        py::arg("braid"), "None for the zero sum.");

    m.def("kontsevich", [](const std::string& braid, unsigned order) {
        return series_cells(kontsevich(parse_braid_sum(braid), order));
    }, py::arg("braid"), py::arg("order") = 7);
    m.def("residue", [](const std::string& braid) {
        const GradedValue g = residue(parse_braid_sum(braid));
        return py::make_tuple(g.order, to_string(g.value));
    }, py::arg("braid"));

    m.def(
        "lift",
        [](unsigned order, const std::string& method, const std::string& seed) {
            if (method == "reversion") {
                if (parse_braid_sum(seed) != BraidSum::tau()) {
                    throw std::invalid_argument("reversion only supports the tau seed");
                }
                return lift_cells(lift_via_reversion(order));
            }
            if (method != "strengthen") throw std::invalid_argument("method must be 'strengthen' or 'reversion'");
            return lift_cells(strengthen_to(parse_braid_sum(seed), order));
        },
        py::arg("order"), py::arg("method") = "strengthen", py::arg("seed") = "tau");

    m.def("q_expand", [](unsigned order) {
        std::map<Exponent, std::string> out;
        for (const auto& [n, c] : q_expand(strengthen_to(BraidSum::tau(), order)).pair_coeffs) {
            out.emplace(n, to_string(c));
        }
        return out;
    }, py::arg("order"));

    m.def(
        "asymptotics",
        [](unsigned j, const std::vector<unsigned>& orders, unsigned digits, unsigned jobs) {
            const FloatContext ctx(digits);
            std::vector<py::dict> rows;
            for (const auto& row : asymptotic_check(j, orders, ctx, jobs)) {
                py::dict d;
                d["order"] = row.order;
                d["coefficient"] = to_string(row.coefficient);
                d["coefficient_float"] = ctx.format(row.coefficient_value);
                d["target_float"] = ctx.format(row.target);
                d["abs_error_float"] = ctx.format(row.abs_error);
                rows.push_back(std::move(d));
            }
            return rows;
        },
        py::arg("j"), py::arg("orders"), py::arg("digits") = kDefaultFloatDigits, py::arg("jobs") = 1);

    m.def("theta_value", [](unsigned k) { return to_string(theta_value(k)); }, py::arg("k"));
    m.def("beta_relation_lhs", [](unsigned s) { return to_string(beta_relation_lhs(s)); }, py::arg("s"));
    m.def("leibniz_partial", [](unsigned r) { return to_string(leibniz_partial(r)); }, py::arg("r"));

    m.def(
        "basis_inverse",
        [](unsigned r, const std::string& kind, bool with_factorials) {
            return matrix_cells(invert(power_matrix(basis_nodes(basis_kind(kind), r), with_factorials)));
        },
        py::arg("r"), py::arg("kind") = "balanced", py::arg("with_factorials") = false);
    m.def(
        "entry_sequence",
        [](const std::string& kind, std::size_t row, std::size_t col, const std::vector<unsigned>& rs,
           bool with_factorials, unsigned jobs) {
            std::vector<std::string> out;
            for (const auto& v : entry_sequence(basis_kind(kind), row, col, rs, with_factorials, jobs)) {
                out.push_back(to_string(v));
            }
            return out;
        },
        py::arg("kind"), py::arg("row"), py::arg("col"), py::arg("r_values"),
        py::arg("with_factorials") = false, py::arg("jobs") = 1);
    m.def("solve_t", [](unsigned r, const std::string& kind) {
        return to_string(solve_t(basis_kind(kind), r));
    }, py::arg("r"), py::arg("kind") = "balanced");

    m.def(
        "condition_c",
        [](const std::string& sequence_json, std::size_t window) {
            return condition_c_dict(filtration_condition_c(parse_sequence_json(sequence_json), window));
        },
        py::arg("sequence_json"), py::arg("window") = 0);
    m.def("builtin_sequence", [](const std::string& name, unsigned length) {
        if (name == "tauhat") return sequence_to_json(tauhat_truncations(length));
        if (name == "pitauhat") return sequence_to_json(pi_tauhat_partial_sums(length));
        if (name == "harmonic") return sequence_to_json(alternating_harmonic(length));
        throw std::invalid_argument("unknown sequence '" + name + "'");
    }, py::arg("name"), py::arg("length"));

    m.def(
        "reproduce",
        [](const std::vector<std::string>& names) {
            const ReproduceResult r = reproduce(names);
            py::dict d;
            d["passed"] = r.passed;
            d["flagged"] = r.flagged;
            d["failed"] = r.failed;
            d["json"] = render(r.tables, OutputFormat::json);
            return d;
        },
        py::arg("tables") = std::vector<std::string>{});

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}

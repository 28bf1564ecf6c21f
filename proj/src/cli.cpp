#include <braidinv/cli.hpp>

#include <braidinv/basis_solver.hpp>
#include <braidinv/convergence.hpp>
#include <braidinv/inverse_engine.hpp>
#include <braidinv/kontsevich.hpp>
#include <braidinv/precision.hpp>
#include <braidinv/regularization.hpp>
#include <braidinv/reproduce.hpp>
#include <braidinv/table.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace braidinv::cli {

namespace {

struct OutputOptions {
    std::string format = "text";
    unsigned float_digits = kDefaultFloatDigits;
    std::string out_path;
    unsigned jobs = 1;
};

struct Outcome {
    std::vector<Table> tables;
    int code = kOk;
};

using Command = std::function<Outcome(const OutputOptions&)>;

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string order_text(int order) {
    return order == kInfiniteOrder ? "inf" : std::to_string(order);
}

// ---------------------------------------------------------------- lift

struct LiftArgs {
    unsigned order = 0;
    std::string method = "strengthen";
    std::string seed = "tau";
    bool report = false;
};

Outcome lift_command(const LiftArgs& a) {
    const BraidSum seed = parse_braid_sum(a.seed);
    LiftPoly lift;
    if (a.method == "strengthen") {
        lift = strengthen_to(seed, a.order);
    } else {
        if (seed != BraidSum::tau()) {
            throw std::invalid_argument("--method reversion only supports the tau seed");
        }
        lift = lift_via_reversion(a.order);
    }
    Outcome o;
    Table t;
    t.name = "lift";
    t.columns = {"degree", "coefficient"};
    for (const auto& [k, c] : lift.coeffs) t.add_row({std::to_string(k), to_string(c)});
    t.notes.push_back("t -> " + to_string(lift) + " + O(t^" + std::to_string(a.order + 1) + ")");
    o.tables.push_back(std::move(t));

    if (a.report) {
        Table r;
        r.name = "coefficient-report";
        r.columns = {"degree", "numerator", "denominator", "arcsinh_numerator", "numerators_agree"};
        bool all_agree = true;
        for (const auto& row : coefficient_report(lift)) {
            r.add_row({std::to_string(row.degree), row.numerator.get_str(),
                       row.denominator.get_str(), row.arcsinh_numerator.get_str(),
                       yes_no(row.numerator_matches)});
            all_agree = all_agree && row.numerator_matches;
        }
        o.tables.push_back(std::move(r));
        if (!all_agree) o.code = kMismatch;
    }
    return o;
}

// ---------------------------------------------------------------- zmap

struct ZmapArgs {
    std::string braid = "tau";
    unsigned order = 7;
    int focus = -1;
};

Outcome zmap_command(const ZmapArgs& a) {
    const BraidSum b = parse_braid_sum(a.braid);
    Outcome o;
    Table z;
    z.name = "kontsevich";
    z.columns = {"degree", "coefficient"};
    const Series s = kontsevich(b, a.order);
    for (unsigned i = 0; i <= a.order; ++i) z.add_row({std::to_string(i), to_string(s[i])});
    z.notes.push_back("b = " + to_string(b));
    z.notes.push_back("Z(b) = " + to_string(s));
    o.tables.push_back(std::move(z));

    Table r;
    r.name = "residue";
    r.columns = {"filtration_order", "value"};
    if (b.is_zero()) {
        r.add_row({"inf", "0"});
    } else {
        const GradedValue g = residue(b);
        r.add_row({std::to_string(g.order), to_string(g.value)});
    }
    o.tables.push_back(std::move(r));

    if (a.focus >= 0) {
        const auto jmax = static_cast<unsigned>(a.focus);
        const auto profile = focus_profile(b, jmax);
        Table f;
        f.name = "focus-profile";
        f.columns = {"order", "value"};
        std::vector<unsigned> nonzero;
        for (const auto& g : profile) {
            f.add_row({std::to_string(g.order), to_string(g.value)});
            if (g.value != 0) nonzero.push_back(g.order);
        }
        if (nonzero.size() == 1) {
            f.notes.push_back("focussed on order " + std::to_string(nonzero.front()) +
                              " through j=" + std::to_string(jmax));
        } else {
            f.notes.push_back("not focussed through j=" + std::to_string(jmax));
        }
        o.tables.push_back(std::move(f));
    }
    return o;
}

// ---------------------------------------------------------------- qexpand

struct QexpandArgs {
    unsigned order = 0;
    unsigned power = 1;
};

Outcome qexpand_command(const QexpandArgs& a) {
    if (a.order % 2 == 0) throw std::invalid_argument("--order must be odd");
    if (a.power % 2 == 0) throw std::invalid_argument("--power must be odd");
    const LiftPoly lift = strengthen_to(BraidSum::tau(), a.order);
    const PairExpansion e = a.power == 1 ? q_expand(lift)
                                         : regroup_pairs(power(evaluate(lift), a.power));
    Outcome o;
    Table t;
    t.name = "q-expansion";
    t.columns = {"pair", "coefficient"};
    for (const auto& [n, c] : e.pair_coeffs) t.add_row({"<" + std::to_string(n) + ">", to_string(c)});
    t.notes.push_back("<n> = q^n - p^n; expansion of P_" + std::to_string(a.order) + "(tau)" +
                      (a.power == 1 ? "" : "^" + std::to_string(a.power)));
    o.tables.push_back(std::move(t));
    return o;
}

// ---------------------------------------------------------------- asymptotics

struct AsymptoticsArgs {
    unsigned j = 1;
    std::vector<unsigned> orders;
};

Outcome asymptotics_command(const AsymptoticsArgs& a, const OutputOptions& opts) {
    std::vector<unsigned> orders = a.orders;
    if (orders.empty()) {
        for (unsigned r = std::max(7u, a.j); r <= 49; r += 2) orders.push_back(r);
    }
    const FloatContext ctx(opts.float_digits);
    const auto rows = asymptotic_check(a.j, orders, ctx, opts.jobs);
    Outcome o;
    Table t;
    t.name = "asymptotics";
    t.columns = {"order", "coefficient", "coefficient_float", "target_float", "abs_error_float"};
    t.float_digits = opts.float_digits;
    bool decreasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        t.add_row({std::to_string(row.order), to_string(row.coefficient),
                   ctx.format(row.coefficient_value), ctx.format(row.target),
                   ctx.format(row.abs_error)});
        if (i > 0 && !(row.abs_error < rows[i - 1].abs_error)) decreasing = false;
    }
    t.notes.push_back("coefficient of <" + std::to_string(a.j) + "> vs " +
                      (asymptotic_sign(a.j) > 0 ? "+" : "-") + "4/(pi*" + std::to_string(a.j) +
                      "^2)");
    t.notes.push_back("abs_error strictly decreasing: " + yes_no(decreasing));
    o.tables.push_back(std::move(t));
    return o;
}

// ---------------------------------------------------------------- beta

Outcome beta_command(unsigned s, const OutputOptions& opts) {
    Outcome o;
    if (s == 0) throw std::invalid_argument("--s must be at least 1");
    if (s == 1) {
        const FloatContext ctx(opts.float_digits);
        Table t;
        t.name = "leibniz";
        t.columns = {"terms", "estimate_float", "abs_error_float", "bound_float", "within_bound"};
        t.float_digits = opts.float_digits;
        const BigFloat pi = ctx.pi();
        for (unsigned r : {1u, 10u, 100u, 1000u, 10000u}) {
            const BigFloat estimate = ctx.from(z1_tauhat_partial(r)) / pi;
            const BigFloat error = abs(estimate - 1);
            // Alternating series: |pi/4 - L_r| < 1/(2r+1), scaled by 4/pi.
            const BigFloat bound = BigFloat(4) / (pi * (2 * r + 1));
            const bool ok = error < bound;
            t.add_row({std::to_string(r), ctx.format(estimate), ctx.format(error), ctx.format(bound),
                       yes_no(ok)});
            if (!ok) o.code = kMismatch;
        }
        t.notes.push_back("estimate = 4 * sum_{m<r} (-1)^m/(2m+1) / pi -> Z_1(tauhat) = 1");
        o.tables.push_back(std::move(t));
        return o;
    }
    Table t;
    t.name = "beta";
    if (s % 2 == 1) {
        t.columns = {"s", "beta(2-s)", "relation_lhs", "verdict"};
        const Rational value = theta_value(s - 2);
        const Rational lhs = beta_relation_lhs(s);
        const bool ok = lhs == 0 && lhs == value;
        t.add_row({std::to_string(s), to_string(value), to_string(lhs), ok ? "PASS" : "FAIL"});
        t.notes.push_back("relation_lhs = 2^(s-3) s! pi Z_s(tauhat), divergent sum taken as its Abel value");
        if (!ok) o.code = kMismatch;
    } else {
        t.columns = {"s", "beta(2-s)"};
        t.add_row({std::to_string(s), to_string(theta_value(s - 2))});
        t.notes.push_back("the relation is only proposed for odd s >= 3");
    }
    o.tables.push_back(std::move(t));
    return o;
}

// ---------------------------------------------------------------- basis

struct BasisArgs {
    bool balanced = false;
    bool unbalanced = false;
    unsigned r = 0;
    std::vector<std::size_t> entry;
    bool solve_t = false;
    bool with_factorials = false;
    bool zeta2 = false;
};

Table matrix_table(const std::string& name, const ExactMatrix& m) {
    Table t;
    t.name = name;
    for (std::size_t c = 0; c < m.dim(); ++c) t.columns.push_back("c" + std::to_string(c + 1));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
        t.add_row(std::move(row));
    }
    return t;
}

Outcome basis_command(const BasisArgs& a, const OutputOptions& opts) {
    const BasisKind kind = a.unbalanced ? BasisKind::unbalanced : BasisKind::balanced;
    const std::string kind_name = a.unbalanced ? "unbalanced" : "balanced";
    Outcome o;
    const bool matrices = a.entry.empty() && !a.solve_t && !a.zeta2;
    if (matrices) {
        const ExactMatrix m = power_matrix(basis_nodes(kind, a.r), a.with_factorials);
        Table mt = matrix_table("matrix", m);
        std::string nodes;
        for (Exponent n : basis_nodes(kind, a.r)) nodes += (nodes.empty() ? "" : ",") + std::to_string(n);
        mt.notes.push_back(kind_name + " nodes " + nodes + (a.with_factorials ? ", rows divided by i!" : ""));
        o.tables.push_back(std::move(mt));
        o.tables.push_back(matrix_table("inverse", invert(m)));
    }
    if (!a.entry.empty()) {
        if (a.entry.size() != 2) throw std::invalid_argument("--entry expects ROW,COL");
        const std::size_t need = std::max(a.entry[0], a.entry[1]);
        std::vector<unsigned> range;
        for (unsigned r = 0; r <= a.r; ++r) {
            if (basis_nodes(kind, r).size() >= need) range.push_back(r);
        }
        const auto values = entry_sequence(kind, a.entry[0], a.entry[1], range, a.with_factorials, opts.jobs);
        Table t;
        t.name = "entry-sequence";
        t.columns = {"r", "entry"};
        for (std::size_t i = 0; i < range.size(); ++i) t.add_row({std::to_string(range[i]), to_string(values[i])});
        t.notes.push_back(kind_name + " inverse entry (" + std::to_string(a.entry[0]) + "," +
                          std::to_string(a.entry[1]) + ")");
        o.tables.push_back(std::move(t));
    }
    if (a.zeta2) {
        if (kind != BasisKind::balanced) throw std::invalid_argument("--zeta2 needs the balanced basis");
        Table t;
        t.name = "zeta2";
        t.columns = {"r", "entry", "partial_sum", "equal"};
        for (const auto& row : zeta2_check(a.r)) {
            t.add_row({std::to_string(row.r), to_string(row.entry), to_string(row.partial_sum),
                       yes_no(row.equal)});
        }
        t.notes.push_back("partial_sum = sum_{k<=r} 1/k^2; a 'no' is a finding, not an error");
        o.tables.push_back(std::move(t));
    }
    if (a.solve_t) {
        const BraidSum solution = solve_t(kind, a.r);
        Table t;
        t.name = "basis-solution";
        t.columns = {"exponent", "coefficient"};
        for (auto it = solution.terms().rbegin(); it != solution.terms().rend(); ++it) {
            t.add_row({std::to_string(it->first), to_string(it->second)});
        }
        t.notes.push_back("Z_i(solution) = [i == 1] for i < " + std::to_string(basis_nodes(kind, a.r).size()));
        o.tables.push_back(std::move(t));
        if (kind == BasisKind::balanced) {
            Table c;
            c.name = "basis-vs-lift";
            c.columns = {"exponent", "basis", "lift", "difference"};
            for (const auto& row : compare_with_lift(a.r)) {
                c.add_row({std::to_string(row.exponent), to_string(row.basis_coefficient),
                           to_string(row.lift_coefficient), to_string(row.difference)});
            }
            c.notes.push_back("lift = P_" + std::to_string(2 * a.r - 1) +
                              "(tau); no equality between the two limits is claimed");
            o.tables.push_back(std::move(c));
        }
    }
    return o;
}

// ---------------------------------------------------------------- trace

struct TraceArgs {
    std::string sequence = "tauhat";
    std::string file;
    std::string braid = "tau";
    unsigned jmax = 5;
    unsigned window = 8;
    std::string add;
};

BraidSumSequence load_sequence(const std::string& kind, const TraceArgs& a) {
    if (kind == "tauhat") return tauhat_truncations(a.window);
    if (kind == "pitauhat") return pi_tauhat_partial_sums(a.window);
    if (kind == "harmonic") return alternating_harmonic(a.window);
    if (kind == "constant") return constant_sequence(parse_braid_sum(a.braid), a.window);
    if (kind == "file") {
        if (a.file.empty()) throw std::invalid_argument("--sequence file needs --file PATH");
        std::ifstream in(a.file);
        if (!in) throw std::invalid_argument("cannot read " + a.file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_sequence_json(buf.str());
    }
    throw std::invalid_argument("unknown sequence '" + kind + "'");
}

std::string trace_cell(const std::vector<Rational>& trace) {
    return trace.empty() ? "" : to_string(trace.back());
}

Outcome trace_command(const TraceArgs& a) {
    const BraidSumSequence seq = load_sequence(a.sequence, a);
    const BiconvergenceReport report = biconvergence_report(seq, a.jmax, a.window);
    Outcome o;

    Table coeffs;
    coeffs.name = "coefficient-traces";
    coeffs.columns = {"exponent", "behaviour", "last"};
    for (const auto& v : report.coefficient_traces) {
        coeffs.add_row({std::to_string(v.key), to_string(v.behaviour), trace_cell(v.trace)});
    }
    o.tables.push_back(std::move(coeffs));

    Table zs;
    zs.name = "z-traces";
    zs.columns = {"j", "behaviour", "last"};
    for (const auto& v : report.z_traces) {
        zs.add_row({std::to_string(v.key), to_string(v.behaviour), trace_cell(v.trace)});
    }
    o.tables.push_back(std::move(zs));

    Table verdicts;
    verdicts.name = "biconvergence";
    verdicts.columns = {"condition", "verdict", "detail"};
    verdicts.add_row({"a", report.condition_a() ? "pass" : "fail", "coefficient traces settle"});
    verdicts.add_row({"b", report.condition_b() ? "pass" : "fail",
                      "Z_j traces settle for j <= " + std::to_string(a.jmax)});
    std::string detail = std::to_string(report.condition_c.pairs_checked) + " pairs checked";
    if (const auto& v = report.condition_c.first_violation) {
        detail += "; first violation (i=" + std::to_string(v->i) + ", j=" + std::to_string(v->j) +
                  ") order " + order_text(v->order);
    }
    verdicts.add_row({"c", report.condition_c.satisfied() ? "pass" : "fail", detail});
    verdicts.notes.push_back("sequence '" + report.label + "', window " +
                             std::to_string(report.window) +
                             "; verdicts are finite-window evidence, not proofs of convergence");
    o.tables.push_back(std::move(verdicts));

    if (!a.add.empty()) {
        const BraidSumSequence other = load_sequence(a.add, a);
        const AdditivityResult r = additivity_check(seq, other, a.jmax);
        Table t;
        t.name = "additivity";
        t.columns = {"check", "holds", "count"};
        t.add_row({"coefficient traces add", yes_no(r.coefficients_add), std::to_string(r.exponents_checked)});
        t.add_row({"Z traces add", yes_no(r.z_values_add), std::to_string(r.orders_checked)});
        if (!r.coefficients_add || !r.z_values_add) o.code = kMismatch;
        o.tables.push_back(std::move(t));
    }
    return o;
}

// ---------------------------------------------------------------- reproduce

Outcome reproduce_command(const std::vector<std::string>& names) {
    ReproduceResult r = reproduce(names);
    Outcome o;
    o.tables = std::move(r.tables);
    Table summary;
    summary.name = "summary";
    summary.columns = {"passed", "flagged", "failed"};
    summary.add_row({std::to_string(r.passed), std::to_string(r.flagged), std::to_string(r.failed)});
    o.tables.push_back(std::move(summary));
    o.code = r.failed == 0 ? kOk : kMismatch;
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for the inverse of the Kontsevich integral on B2", "braidinv"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opts;
    opts.float_digits = default_float_digits();
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--float-digits", opts.float_digits,
                   "Significant digits for float columns (env BRAIDINV_FLOAT_DIGITS)")
        ->check(CLI::Range(kMinFloatDigits, 100000u));
    app.add_option("--out", opts.out_path, "Write output to this file");
    app.add_option("--jobs", opts.jobs, "Worker threads for independent table rows")
        ->check(CLI::Range(1u, 256u));

    Command command;

    LiftArgs lift_args;
    auto* lift = app.add_subcommand("lift", "Strong lift t -> P(seed)");
    lift->add_option("--order", lift_args.order)->required()->check(CLI::Range(1u, 1000u));
    lift->add_option("--method", lift_args.method)->check(CLI::IsMember({"strengthen", "reversion"}));
    lift->add_option("--seed", lift_args.seed, "Weak-inverse seed (strengthen only)");
    lift->add_flag("--report", lift_args.report, "Numerator/denominator report");
    lift->callback([&] { command = [&](const OutputOptions&) { return lift_command(lift_args); }; });

    ZmapArgs zmap_args;
    auto* zmap = app.add_subcommand("zmap", "Kontsevich integral of a braid sum");
    zmap->add_option("--braid", zmap_args.braid, "e.g. 'tau', 'q - p', '1*q^2 + -1*q^-2', '<3>'");
    zmap->add_option("--order", zmap_args.order)->check(CLI::Range(0u, 1000u));
    zmap->add_option("--focus", zmap_args.focus, "Focus profile through this order")
        ->check(CLI::Range(0, 1000));
    zmap->callback([&] { command = [&](const OutputOptions&) { return zmap_command(zmap_args); }; });

    QexpandArgs qexpand_args;
    auto* qexpand = app.add_subcommand("qexpand", "Lift expanded in pairs <n> = q^n - p^n");
    qexpand->add_option("--order", qexpand_args.order)->required()->check(CLI::Range(1u, 1000u));
    qexpand->add_option("--power", qexpand_args.power)->check(CLI::Range(1u, 100u));
    qexpand->callback([&] { command = [&](const OutputOptions&) { return qexpand_command(qexpand_args); }; });

    AsymptoticsArgs asym_args;
    auto* asym = app.add_subcommand("asymptotics", "Pair coefficients against their limits");
    asym->add_option("--j", asym_args.j)->check(CLI::Range(1u, 1000u));
    asym->add_option("--orders", asym_args.orders)->delimiter(',');
    asym->callback([&] {
        command = [&](const OutputOptions& s) { return asymptotics_command(asym_args, s); };
    });

    unsigned beta_s = 0;
    auto* beta = app.add_subcommand("beta", "Regularized Dirichlet beta relation");
    beta->add_option("--s", beta_s)->required()->check(CLI::Range(1u, 200u));
    beta->callback([&] { command = [&](const OutputOptions& s) { return beta_command(beta_s, s); }; });

    BasisArgs basis_args;
    auto* basis = app.add_subcommand("basis", "Basis-sequence moment matrices");
    auto* bal = basis->add_flag("--balanced", basis_args.balanced, "Nodes 0, 1, -1, 2, -2, ... (default)");
    auto* unbal = basis->add_flag("--unbalanced", basis_args.unbalanced, "Nodes 0, 1, 2, ...");
    bal->excludes(unbal);
    basis->add_option("--r", basis_args.r)->required()->check(CLI::Range(0u, 60u));
    basis->add_option("--entry", basis_args.entry, "1-based ROW,COL of the inverse")
        ->delimiter(',')
        ->expected(2);
    basis->add_flag("--solve-t", basis_args.solve_t, "Solve for the target t");
    basis->add_flag("--with-factorials", basis_args.with_factorials, "Divide row i by i!");
    basis->add_flag("--zeta2", basis_args.zeta2, "Compare -N_r(1,3) with zeta(2) partial sums");
    basis->callback([&] {
        command = [&](const OutputOptions& s) { return basis_command(basis_args, s); };
    });

    TraceArgs trace_args;
    auto* trace = app.add_subcommand("trace", "Biconvergence diagnostics for a sequence");
    trace->add_option("--sequence", trace_args.sequence)
        ->check(CLI::IsMember({"tauhat", "pitauhat", "harmonic", "constant", "file"}));
    trace->add_option("--file", trace_args.file, "JSON sequence of term maps");
    trace->add_option("--braid", trace_args.braid, "Element for --sequence constant");
    trace->add_option("--jmax", trace_args.jmax)->check(CLI::Range(0u, 200u));
    trace->add_option("--window", trace_args.window)->check(CLI::Range(1u, 500u));
    trace->add_option("--add", trace_args.add, "Check additivity against another built-in sequence")
        ->check(CLI::IsMember({"tauhat", "pitauhat", "harmonic", "constant"}));
    trace->callback([&] {
        command = [&](const OutputOptions&) { return trace_command(trace_args); };
    });

    bool reproduce_all = false;
    std::vector<std::string> reproduce_names;
    auto* repro = app.add_subcommand("reproduce", "Recompute published tables");
    repro->add_flag("--all", reproduce_all, "Every table (default)");
    repro->add_option("--table", reproduce_names)->check(CLI::IsMember(reproduce_table_names()));
    repro->callback([&] {
        command = [&](const OutputOptions&) {
            return reproduce_command(reproduce_all ? std::vector<std::string>{} : reproduce_names);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    Outcome outcome;
    try {
        outcome = command(opts);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kMismatch;
    }

    const std::string rendered = render(outcome.tables, parse_output_format(opts.format));
    if (opts.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(opts.out_path);
        if (!file || !(file << rendered)) {
            err << "error: cannot write " << opts.out_path << '\n';
            return kUsageError;
        }
    }
    return outcome.code;
}

} // namespace braidinv::cli

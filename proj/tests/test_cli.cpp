#include <doctest.h>

#include <braidinv/cli.hpp>
#include <braidinv/table.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace braidinv;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_SUITE("table") {
    TEST_CASE("rendering") {
        Table t;
        t.name = "demo";
        t.columns = {"a", "b_float"};
        t.float_digits = 12;
        t.add_row({"1/2", "5.00000000000e-01"});
        t.add_row({"x,y", "say \"hi\""});
        t.notes.push_back("note");
        CHECK_THROWS_AS(t.add_row({"only one"}), std::logic_error);

        const std::string text = render({t}, OutputFormat::text);
        CHECK(text.rfind("== demo (floats: 12 digits) ==\n", 0) == 0);
        CHECK(text.find("# note") != std::string::npos);

        const std::string csv = render({t}, OutputFormat::csv);
        CHECK(csv.find("\"x,y\",\"say \"\"hi\"\"\"") != std::string::npos);

        const std::string json = render({t, t}, OutputFormat::json);
        const auto back = parse_tables_json(json);
        REQUIRE(back.size() == 2);
        CHECK(back[0] == t);
        CHECK(render(back, OutputFormat::json) == json);
        CHECK_THROWS_AS(parse_tables_json("[]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("lift methods are byte-identical") {
        for (int n = 1; n <= 25; ++n) {
            for (const char* fmt : {"text", "json", "csv"}) {
                CAPTURE(n);
                const Run a = run({"--format", fmt, "lift", "--order", std::to_string(n)});
                const Run b = run({"--format", fmt, "lift", "--order", std::to_string(n), "--method", "reversion"});
                REQUIRE(a.code == 0);
                REQUIRE(b.code == 0);
                CHECK(a.out == b.out);
            }
        }
    }

    TEST_CASE("JSON output round-trips for every subcommand") {
        const std::vector<std::vector<std::string>> commands{
            {"lift", "--order", "9", "--report"},
            {"zmap", "--braid", "tau^2", "--focus", "4"},
            {"qexpand", "--order", "11"},
            {"asymptotics", "--j", "3", "--orders", "7,9,11"},
            {"beta", "--s", "7"},
            {"beta", "--s", "1"},
            {"basis", "--r", "3"},
            {"basis", "--r", "6", "--entry", "1,5", "--zeta2", "--solve-t"},
            {"trace", "--sequence", "harmonic", "--add", "tauhat", "--window", "6"},
            {"reproduce", "--table", "q-expansion"},
        };
        for (auto args : commands) {
            CAPTURE(args.front());
            args.insert(args.begin(), {"--format", "json", "--float-digits", "15"});
            const Run r = run(args);
            REQUIRE(r.code == 0);
            const auto tables = parse_tables_json(r.out);
            CHECK_FALSE(tables.empty());
            CHECK(render(tables, OutputFormat::json) == r.out);
        }
    }

    TEST_CASE("global options may follow the subcommand") {
        const Run a = run({"--format", "csv", "zmap"});
        const Run b = run({"zmap", "--format", "csv"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("exit codes") {
        CHECK(run({}).code == cli::kUsageError);
        CHECK(run({"bogus"}).code == cli::kUsageError);
        CHECK(run({"lift"}).code == cli::kUsageError);
        CHECK(run({"lift", "--order", "x"}).code == cli::kUsageError);
        CHECK(run({"--format", "xml", "lift", "--order", "3"}).code == cli::kUsageError);
        CHECK(run({"--float-digits", "5", "beta", "--s", "1"}).code == cli::kUsageError);
        CHECK(run({"qexpand", "--order", "4"}).code == cli::kUsageError);
        CHECK(run({"lift", "--order", "3", "--seed", "tau^2"}).code == cli::kUsageError);
        CHECK(run({"lift", "--order", "3", "--seed", "2*q - 2", "--method", "reversion"}).code ==
              cli::kUsageError);
        CHECK(run({"basis", "--r", "2", "--balanced", "--unbalanced"}).code == cli::kUsageError);
        CHECK(run({"basis", "--r", "2", "--unbalanced", "--zeta2"}).code == cli::kUsageError);
        CHECK(run({"trace", "--sequence", "file"}).code == cli::kUsageError);
        CHECK(run({"reproduce", "--table", "nope"}).code == cli::kUsageError);
        CHECK(run({"--help"}).code == cli::kOk);
        CHECK(run({"lift", "--help"}).code == cli::kOk);
        CHECK(run({"beta", "--s", "3"}).code == cli::kOk);
        const Run r = run({"reproduce", "--all"});
        CHECK(r.code == cli::kOk);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("FLAGGED") != std::string::npos);
    }

    TEST_CASE("output file and sequence file") {
        const auto dir = std::filesystem::temp_directory_path();
        const auto seq_path = dir / "braidinv_cli_sequence.json";
        const auto out_path = dir / "braidinv_cli_out.csv";
        {
            std::ofstream f(seq_path);
            f << R"({"label": "pairs", "items": [{"1": "1", "-1": "-1"}, {"1": "1", "-1": "-1"}]})";
        }
        const Run r = run({"--format", "csv", "--out", out_path.string(), "trace", "--sequence",
                           "file", "--file", seq_path.string(), "--jmax", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(out_path);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str().find("sequence 'pairs'") != std::string::npos);
        std::filesystem::remove(seq_path);
        std::filesystem::remove(out_path);
    }

    TEST_CASE("asymptotics note and precision") {
        const Run r = run({"--float-digits", "20", "asymptotics"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("abs_error strictly decreasing: yes") != std::string::npos);
        CHECK(r.out.find("(floats: 20 digits)") != std::string::npos);
    }
}

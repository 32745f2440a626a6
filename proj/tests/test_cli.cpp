// End-to-end CLI behavior through the in-process entry point: subcommand
// output, format switches, exit codes, and byte determinism.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qratio/cli.hpp"
#include "qratio/enumeration.hpp"
#include "qratio/graph6.hpp"
#include "qratio/kite_math.hpp"
#include "qratio/verify.hpp"

using namespace qratio;

namespace {

struct CliRun {
    int rc = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"qratio"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int rc =
        cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

// value printed on the table line "key<pad>value"
std::string table_value(const std::string& out, const std::string& key) {
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key, 0) != 0) continue;
        if (line.size() > key.size() && line[key.size()] != ' ') continue;
        std::size_t pos = key.size();
        while (pos < line.size() && line[pos] == ' ') ++pos;
        return line.substr(pos);
    }
    return {};
}

std::vector<nlohmann::json> json_lines(const std::string& out) {
    std::vector<nlohmann::json> rows;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
    return rows;
}

} // namespace

TEST_CASE("ratio: regular graphs report gamma 1") {
    const CliRun cycle = run_cli({"ratio", "--builtin", "cycle", "--n", "7"});
    CHECK(cycle.rc == 0);
    CHECK(table_value(cycle.out, "gamma") == "1");
    CHECK(table_value(cycle.out, "q1") == "4");

    const CliRun k4 = run_cli({"ratio", "--graph6", "C~"});
    CHECK(k4.rc == 0);
    CHECK(table_value(k4.out, "gamma") == "1");
    CHECK(table_value(k4.out, "q1") == "6");
}

TEST_CASE("ratio: kite(4,2) in all three formats") {
    const CliRun table =
        run_cli({"ratio", "--builtin", "kite", "--n", "4", "--k", "2"});
    CHECK(table.rc == 0);
    CHECK(std::strtod(table_value(table.out, "gamma").c_str(), nullptr) ==
          doctest::Approx(3.5615528128).epsilon(1e-10));

    const CliRun js = run_cli(
        {"--output", "json", "ratio", "--builtin", "kite", "--n", "4", "--k", "2"});
    CHECK(js.rc == 0);
    const auto rows = json_lines(js.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["n"] == 4);
    CHECK(rows[0]["gamma"].get<double>() ==
          doctest::Approx(3.5615528128).epsilon(1e-10));
    CHECK(rows[0]["path"] == nlohmann::json::array({0, 1}));

    const CliRun csv = run_cli(
        {"--output", "csv", "ratio", "--builtin", "kite", "--n", "4", "--k", "2"});
    CHECK(csv.rc == 0);
    std::istringstream in(csv.out);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    CHECK(header ==
          "n,edges,q1,gamma,vmin,vmax,path,pendant_prefix,iterations,residual,"
          "converged,underflow_risk,log_space_recommended");
    CHECK(row.rfind("4,4,", 0) == 0);
    CHECK(row.find("0-1") != std::string::npos);
}

TEST_CASE("kite agrees with the eigensolver route and switches scales") {
    const CliRun scalar = run_cli({"--output", "json", "kite", "--n", "12", "--k", "6"});
    const CliRun eigen = run_cli(
        {"--output", "json", "ratio", "--builtin", "kite", "--n", "12", "--k", "6"});
    REQUIRE(scalar.rc == 0);
    REQUIRE(eigen.rc == 0);
    const double gs = json_lines(scalar.out)[0]["gamma"].get<double>();
    const double ge = json_lines(eigen.out)[0]["gamma"].get<double>();
    CHECK(std::abs(gs - ge) <= 1e-8 * ge);
    CHECK(json_lines(scalar.out)[0]["mode"] == "linear");
    CHECK(json_lines(scalar.out)[0]["log_gamma"].is_null());

    // k > 100 flips the default to the log scale and stays finite
    const CliRun big = run_cli({"--output", "json", "kite", "--n", "300", "--k", "250"});
    REQUIRE(big.rc == 0);
    const auto row = json_lines(big.out)[0];
    CHECK(row["mode"] == "log");
    CHECK(row["gamma"].is_null());
    const double lg = row["log_gamma"].get<double>();
    CHECK(std::isfinite(lg));
    CHECK(lg > 1000.0);

    // forcing the linear scale at that size overflows: exit 4
    const CliRun forced =
        run_cli({"kite", "--n", "300", "--k", "250", "--mode", "linear"});
    CHECK(forced.rc == 4);
    CHECK(forced.err.find("log") != std::string::npos);

    // explicit --mode log below the threshold is honored
    const CliRun small =
        run_cli({"--output", "json", "kite", "--n", "12", "--k", "6", "--mode", "log"});
    REQUIRE(small.rc == 0);
    CHECK(json_lines(small.out)[0]["log_gamma"].get<double>() ==
          doctest::Approx(std::log(gs)).epsilon(1e-12));
}

TEST_CASE("best-kite matches the scalar maximizer") {
    const CliRun r = run_cli({"best-kite", "--n", "4"});
    CHECK(r.rc == 0);
    CHECK(table_value(r.out, "k_star") == "2");

    const CliRun big = run_cli({"--output", "json", "best-kite", "--n", "100"});
    REQUIRE(big.rc == 0);
    const auto row = json_lines(big.out)[0];
    const BestKite want = best_kite_k(100);
    CHECK(row["k_star"].get<std::uint32_t>() == want.k);
    CHECK(row["log_gamma"].get<double>() == want.log_gamma);

    CHECK(run_cli({"best-kite", "--n", "3"}).rc == 2);
    CHECK(run_cli({"best-kite"}).rc == 2); // --n is required
}

TEST_CASE("search: native sweep, json shape, and chunk splitting") {
    const CliRun table = run_cli({"search", "--n", "4"});
    CHECK(table.rc == 0);
    CHECK(table_value(table.out, "graphs_seen") == "38");
    CHECK(table_value(table.out, "is_kite") == "true");
    CHECK(table_value(table.out, "kite_k") == "2");

    const CliRun js = run_cli({"--output", "json", "search", "--n", "4", "--top", "3"});
    REQUIRE(js.rc == 0);
    const auto rows = json_lines(js.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["record"]["gamma_max"].get<double>() ==
          doctest::Approx(3.5615528128).epsilon(1e-10));
    CHECK(rows[0]["ranking"].size() == 3);
    CHECK(rows[0]["ranking"][0]["rank"] == 1);

    // one shard sees a subset; the shard totals add up to the full corpus
    std::uint64_t seen = 0;
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        const std::string spec = std::to_string(i) + "/4";
        const CliRun part = run_cli({"--output", "json", "search", "--n", "4",
                                     "--chunk", spec.c_str(), "--top", "1"});
        REQUIRE(part.rc == 0);
        const auto r = json_lines(part.out)[0];
        seen += r["graphs_seen"].get<std::uint64_t>();
        best = std::max(best, r["record"]["gamma_max"].get<double>());
    }
    CHECK(seen == 38);
    CHECK(best == doctest::Approx(3.5615528128).epsilon(1e-10));

    CHECK(run_cli({"search", "--n", "4", "--chunk", "4/4"}).rc == 2);
    CHECK(run_cli({"search", "--n", "4", "--chunk", "nonsense"}).rc == 2);
    CHECK(run_cli({"search", "--n", "9"}).rc == 2);
    CHECK(run_cli({"search"}).rc == 2);
}

TEST_CASE("search --input replays a stream, counts skips, enforces order") {
    const std::string corpus = ">>graph6<<\nCN\nC~\n\nC`\nCF\n";
    // file-backed: write to a temp path under the build tree
    const std::string path = "cli_stream_test.g6";
    {
        std::ofstream f(path);
        f << corpus;
    }
    const CliRun r = run_cli({"--output", "json", "search", "--input", path.c_str()});
    REQUIRE(r.rc == 0);
    const auto row = json_lines(r.out)[0];
    CHECK(row["graphs_seen"] == 3);
    CHECK(row["disconnected_skipped"] == 1);
    CHECK(row["record"]["argmax_graph6"] == "CN");
    std::remove(path.c_str());

    // a mixed-order stream names the offending line
    {
        std::ofstream f(path);
        f << "D?{\nC~\n";
    }
    const CliRun bad = run_cli({"search", "--input", path.c_str()});
    CHECK(bad.rc == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run_cli({"search", "--input", "no_such_file.g6"}).rc == 2);
}

TEST_CASE("check universal: clean sweep exits 0 and reports per-order tallies") {
    const CliRun r =
        run_cli({"--output", "json", "check", "--suite", "universal", "--n-max", "5"});
    CHECK(r.rc == 0);
    const auto rows = json_lines(r.out);
    REQUIRE(rows.size() == 4); // n = 2, 3, 4, 5
    const std::uint64_t graphs[] = {1, 4, 38, 728};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i]["n"] == i + 2);
        CHECK(rows[i]["graphs"] == graphs[i]);
        CHECK(rows[i]["total_violations"] == 0);
        REQUIRE(rows[i]["lemmas"].size() == 3);
    }
    // frozen n=4 split: 19 graphs clear the q1 > 4 gate for the path bound
    CHECK(rows[2]["lemmas"][0]["holds"] == 19);
    CHECK(rows[2]["lemmas"][0]["not_applicable"] == 19);

    CHECK(run_cli({"check", "--suite", "universal", "--n-max", "8"}).rc == 2);
    CHECK(run_cli({"check", "--suite", "universal"}).rc == 2);
    CHECK(run_cli({"check", "--suite", "bogus", "--n-max", "4"}).rc == 2);
}

TEST_CASE("check universal on one graph prints the three findings") {
    const CliRun r = run_cli(
        {"--output", "json", "check", "--suite", "universal", "--graph6", "DJc"});
    CHECK(r.rc == 0);
    const auto rows = json_lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["lemma_id"] == "ratio_path_bound");
    CHECK(rows[1]["lemma_id"] == "u_growth_sandwich");
    CHECK(rows[2]["lemma_id"] == "small_q_families");
    for (const auto& row : rows) CHECK(row["graph_id"] == "DJc");
    for (const auto& row : rows)
        CHECK((row["status"] == "holds" || row["status"] == "not_applicable"));
}

TEST_CASE("check maximizer: eight diagnostics for a kite") {
    const CliRun r = run_cli({"--output", "json", "check", "--suite", "maximizer",
                              "--builtin", "kite", "--n", "10", "--k", "6"});
    CHECK(r.rc == 0);
    const auto rows = json_lines(r.out);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) CHECK(row["status"] == "diagnostic");
    // sorted by lemma id within one graph
    CHECK(rows[0]["lemma_id"] == "max_entry_degree");
    CHECK(rows[7]["lemma_id"] == "penultimate_degree");
    CHECK(rows[0]["margin"].get<double>() == 0.0);

    // regular graphs have no decomposition: exit 2
    CHECK(run_cli({"check", "--suite", "maximizer", "--builtin", "complete",
                   "--n", "5"}).rc == 2);
    // the maximizer suite takes a single graph, not a stream
    CHECK(run_cli({"check", "--suite", "maximizer", "--input", "x.g6"}).rc == 2);
}

TEST_CASE("scan emits one row per order with the tabulated columns") {
    const CliRun r = run_cli({"--output", "json", "scan", "--n", "50,100"});
    CHECK(r.rc == 0);
    const auto rows = json_lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["n"] == 50);
    CHECK(rows[1]["n"] == 100);
    for (const auto& row : rows) {
        CHECK(row["nk_log_ratio"].get<double>() > 0.5);
        CHECK(row["nk_log_ratio"].get<double>() < 2.0);
        CHECK(row["x_penultimate"].get<double>() <
              row["n_to_minus_sixth"].get<double>());
    }

    const CliRun csv = run_cli({"--output", "csv", "scan", "--n", "50"});
    CHECK(csv.rc == 0);
    CHECK(csv.out.rfind("n,k_star,log_gamma,nk_log_ratio,x_penultimate,"
                        "n_to_minus_sixth\n", 0) == 0);

    CHECK(run_cli({"scan", "--n", "9"}).rc == 2);   // below the asymptotic floor
    CHECK(run_cli({"scan"}).rc == 2);               // --n required
}

TEST_CASE("exit codes: malformed input, disconnection, bad tolerance, help") {
    CHECK(run_cli({"ratio", "--graph6", "###"}).rc == 2);
    CHECK(run_cli({"ratio", "--graph6", "C`"}).rc == 3); // disconnected
    CHECK(run_cli({"ratio", "--builtin", "nonsense", "--n", "5"}).rc == 2);
    CHECK(run_cli({"ratio", "--builtin", "path", "--n", "5", "--graph6", "C~"}).rc == 2);
    CHECK(run_cli({"ratio"}).rc == 2); // no source at all
    CHECK(run_cli({"--tol", "0", "ratio", "--builtin", "path", "--n", "5"}).rc == 2);
    CHECK(run_cli({"--tol", "0.01", "ratio", "--builtin", "path", "--n", "5"}).rc == 2);
    CHECK(run_cli({"--tol", "1e-3", "ratio", "--builtin", "path", "--n", "5"}).rc == 0);
    CHECK(run_cli({"bogus-subcommand"}).rc == 2);
    CHECK(run_cli({}).rc == 2);

    const CliRun help = run_cli({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("byte determinism: repeated runs produce identical output") {
    const auto once = [] {
        return run_cli({"--output", "json", "search", "--n", "5", "--top", "5"});
    };
    const CliRun a = once();
    const CliRun b = once();
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);

    const CliRun t1 = run_cli({"check", "--suite", "universal", "--n-max", "4"});
    const CliRun t2 = run_cli({"check", "--suite", "universal", "--n-max", "4"});
    CHECK(t1.out == t2.out);

    // jobs must not change the result, only the wall time
    const CliRun j1 = run_cli({"--output", "json", "search", "--n", "5", "--jobs", "1"});
    const CliRun j3 = run_cli({"--output", "json", "search", "--n", "5", "--jobs", "3",
                               "--chunks", "7"});
    CHECK(j1.out == j3.out);
}

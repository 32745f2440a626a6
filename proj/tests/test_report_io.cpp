// JSON/CSV serialization: frozen field names and order, quoting rules, and
// round-trip-exact numeric formatting.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qratio/graph.hpp"
#include "qratio/report_io.hpp"
#include "qratio/spectral.hpp"
#include "qratio/verify.hpp"

using namespace qratio;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> keys_of(const ordered_json& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
    return out;
}

Graph paw() {
    Graph::Builder b(4);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(1, 3).add_edge(2, 3);
    return std::move(b).build();
}

} // namespace

TEST_CASE("ratio_to_json freezes the field set and order") {
    const Graph g = paw();
    const PerronResult pr = perron(g);
    const RatioReport rep = make_ratio_report(g, pr);
    const ordered_json j = ratio_to_json(g, pr, rep);

    const std::vector<std::string> expect = {
        "n",          "edges",          "q1",
        "gamma",      "vmin",           "vmax",
        "path",       "pendant_prefix", "iterations",
        "residual",   "converged",      "underflow_risk",
        "log_space_recommended"};
    CHECK(keys_of(j) == expect);
    CHECK(j["n"] == 4);
    CHECK(j["edges"] == 4);
    CHECK(j["gamma"].get<double>() == doctest::Approx(3.5615528128).epsilon(1e-9));
    CHECK(j["path"] == ordered_json::array({0, 1}));
    CHECK(j["converged"] == true);

    // dump() parses back as a single JSON object, byte-stable across calls
    const std::string line = j.dump();
    CHECK(nlohmann::json::parse(line)["q1"].get<double>() == pr.q1);
    CHECK(ratio_to_json(g, pr, rep).dump() == line);
}

TEST_CASE("finding and tally serialization") {
    const Graph g = paw();
    const std::vector<LemmaFinding> fs = check_universal(g);
    REQUIRE(fs.size() == 3);

    const ordered_json j = to_json(fs[0]);
    const std::vector<std::string> expect = {"lemma_id", "graph_id", "status",
                                             "margin", "details"};
    CHECK(keys_of(j) == expect);
    CHECK(j["lemma_id"] == "ratio_path_bound");
    CHECK(j["status"] == "holds");

    UniversalTally t; // empty: worst_rel is +inf, serialized as null
    const ordered_json tj = to_json(t);
    CHECK(keys_of(tj) ==
          std::vector<std::string>{"graphs", "total_violations", "lemmas"});
    REQUIRE(tj["lemmas"].size() == 3);
    CHECK(tj["lemmas"][0]["lemma_id"] == "ratio_path_bound");
    CHECK(tj["lemmas"][1]["lemma_id"] == "u_growth_sandwich");
    CHECK(tj["lemmas"][2]["lemma_id"] == "small_q_families");
    for (const auto& row : tj["lemmas"]) CHECK(row["worst_rel"].is_null());

    const PerronResult pr = perron(g);
    const RatioReport rep = make_ratio_report(g, pr);
    t.add(check_universal_outcome(g, pr, rep), g);
    const ordered_json tj2 = to_json(t);
    CHECK(tj2["graphs"] == 1);
    CHECK(tj2["total_violations"] == 0);
    CHECK(tj2["lemmas"][0]["holds"] == 1);
    CHECK(tj2["lemmas"][0]["worst_rel"].get<double>() == 0.0);
}

TEST_CASE("search result serialization carries ranks and null kite_k") {
    SearchOptions opt;
    opt.top = 3;
    const SearchResult res = extremal_search(4, opt);
    const ordered_json j = to_json(res);
    CHECK(keys_of(j) == std::vector<std::string>{"record", "ranking",
                                                 "graphs_seen",
                                                 "disconnected_skipped"});
    CHECK(keys_of(j["record"]) ==
          std::vector<std::string>{"n", "gamma_max", "argmax_graph6", "is_kite",
                                   "kite_k"});
    CHECK(j["record"]["is_kite"] == true);
    CHECK(j["record"]["kite_k"] == 2);
    REQUIRE(j["ranking"].size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(j["ranking"][i]["rank"] == i + 1);
    // rank 2 at n=4 is the star K_{1,3}: not a kite, so kite_k is null
    CHECK(j["ranking"][1]["is_kite"] == false);
    CHECK(j["ranking"][1]["kite_k"].is_null());
}

TEST_CASE("scan row and probe serialization") {
    const std::vector<std::uint32_t> ns = {12};
    const std::vector<ScanRow> rows = asymptotic_scan(ns);
    REQUIRE(rows.size() == 1);
    const ordered_json j = to_json(rows[0]);
    CHECK(keys_of(j) ==
          std::vector<std::string>{"n", "k_star", "log_gamma", "nk_log_ratio",
                                   "x_penultimate", "n_to_minus_sixth"});
    CHECK(j["n"] == 12);

    const Graph c4 = build_named(Family::cycle, 4);
    const ProbeFinding p = perturbation_probe(c4, 0, 2, EdgeAction::add);
    const ordered_json pj = to_json(p);
    CHECK(keys_of(pj) ==
          std::vector<std::string>{"action", "u", "v", "q_before", "q_after",
                                   "rayleigh_delta", "margin", "holds"});
    CHECK(pj["action"] == "add");
    CHECK(pj["holds"] == true);
}

TEST_CASE("csv escaping follows the quoting rules") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("") == "");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
    CHECK(csv_escape("cr\rhere") == "\"cr\rhere\"");
}

TEST_CASE("csv rows quote comma-bearing details and keep 17-digit numbers") {
    // q_window details contain "window=(a, b)" — a comma that must be quoted
    const Graph kite = build_kite(10, 6);
    const std::vector<LemmaFinding> fs = check_maximizer(decompose_maximizer(kite));
    const LemmaFinding* qw = nullptr;
    for (const LemmaFinding& f : fs)
        if (f.lemma_id == LemmaId::q_window) qw = &f;
    REQUIRE(qw != nullptr);
    const std::string row = to_csv(*qw);
    CHECK(row.find("\"q1=") != std::string::npos);
    // quoted details leave the 5-field shape intact outside the quotes
    CHECK(row.rfind("q_window,", 0) == 0);

    // RankedClass: non-kites leave the kite_k cell empty
    const RankedClass rc{3.0, "CF", false, 0};
    CHECK(to_csv(rc, 2) == "2,3,CF,false,");
    const RankedClass rk{3.5615528128072684, "CN", true, 2};
    const std::string krow = to_csv(rk, 1);
    CHECK(krow.rfind("1,", 0) == 0);
    CHECK(krow.find(",true,2") != std::string::npos);

    // %.17g round-trips doubles exactly
    const double vals[] = {3.5615528128072684, 1.0 / 3.0, 6.980341487407418e-14};
    for (const double v : vals) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        CHECK(std::strtod(buf, nullptr) == v);
    }
    const std::string srow = to_csv(ScanRow{12, 8, 1.0 / 3.0, 0.5, 0.25, 0.125});
    CHECK(srow.find("0.33333333333333331") != std::string::npos);
}

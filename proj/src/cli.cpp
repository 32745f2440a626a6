// Subcommand dispatch over the library: ratio, kite, best-kite, search,
// check, scan. Output is byte-deterministic per format (table %.12g, JSON via
// ordered dumps, CSV %.17g) so runs can be diffed.
#include "qratio/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "qratio/enumeration.hpp"
#include "qratio/errors.hpp"
#include "qratio/graph.hpp"
#include "qratio/graph6.hpp"
#include "qratio/kite_math.hpp"
#include "qratio/report_io.hpp"
#include "qratio/spectral.hpp"
#include "qratio/verify.hpp"

namespace qratio::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { table, json, csv };

struct GlobalOpts {
    std::string output = "table";
    double tol = kDefaultTol;

    Format format() const {
        if (output == "json") return Format::json;
        if (output == "csv") return Format::csv;
        return Format::table;
    }
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void kv(std::ostream& out, std::string_view key, const std::string& value) {
    out << key;
    for (std::size_t i = key.size(); i < 24; ++i) out.put(' ');
    out << value << '\n';
}

const char* yesno(bool b) { return b ? "true" : "false"; }

std::string path_string(std::span<const std::uint32_t> path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) s += '-';
        s += std::to_string(path[i]);
    }
    return s;
}

// One graph named on the command line: a graph6 literal or a builtin family.
struct SourceOpts {
    std::string graph6_text;
    std::string builtin;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
};

Graph load_source(const SourceOpts& s) {
    const bool has_g6 = !s.graph6_text.empty();
    const bool has_builtin = !s.builtin.empty();
    if (has_g6 == has_builtin)
        throw std::invalid_argument("give exactly one of --graph6 or --builtin");
    if (has_g6) return decode_graph6(s.graph6_text);
    if (s.builtin == "kite") return build_kite(s.n, s.k);
    return build_named(family_from_string(s.builtin), s.n);
}

std::uint32_t resolve_jobs(std::uint32_t requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::string finding_line(const LemmaFinding& f) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-24s %-16s %-14s %-16s %s",
                  std::string(to_string(f.lemma_id)).c_str(), f.graph_id.c_str(),
                  std::string(to_string(f.status)).c_str(), fmt12(f.margin).c_str(),
                  f.details.c_str());
    return buf;
}

void sort_findings(std::vector<LemmaFinding>& v) {
    std::sort(v.begin(), v.end(), [](const LemmaFinding& a, const LemmaFinding& b) {
        if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
        return static_cast<int>(a.lemma_id) < static_cast<int>(b.lemma_id);
    });
}

void emit_findings(std::ostream& out, Format fm, std::span<const LemmaFinding> fs) {
    for (const LemmaFinding& f : fs) {
        switch (fm) {
        case Format::json: out << to_json(f).dump() << '\n'; break;
        case Format::csv: out << to_csv(f) << '\n'; break;
        case Format::table: out << finding_line(f) << '\n'; break;
        }
    }
}

void tally_table(std::ostream& out, const UniversalTally& t) {
    static constexpr LemmaId kRows[3] = {LemmaId::ratio_path_bound,
                                         LemmaId::u_growth_sandwich,
                                         LemmaId::small_q_families};
    for (std::size_t r = 0; r < 3; ++r) {
        const std::string wr =
            std::isinf(t.worst_rel[r]) ? std::string("n/a") : fmt12(t.worst_rel[r]);
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "%-24s holds=%llu violated=%llu not_applicable=%llu worst_rel=%s",
                      std::string(to_string(kRows[r])).c_str(),
                      static_cast<unsigned long long>(t.counts[r][0]),
                      static_cast<unsigned long long>(t.counts[r][1]),
                      static_cast<unsigned long long>(t.counts[r][2]), wr.c_str());
        out << buf << '\n';
    }
}

// ---- ratio ----------------------------------------------------------------

constexpr const char* kRatioCsvHeader =
    "n,edges,q1,gamma,vmin,vmax,path,pendant_prefix,iterations,residual,"
    "converged,underflow_risk,log_space_recommended";

int cmd_ratio(const SourceOpts& src, const GlobalOpts& g, std::ostream& out) {
    const Graph graph = load_source(src);
    PerronOptions popt;
    popt.tol = g.tol;
    const PerronResult pr = perron(graph, popt);
    const RatioReport rep = make_ratio_report(graph, pr);
    switch (g.format()) {
    case Format::json:
        out << ratio_to_json(graph, pr, rep).dump() << '\n';
        break;
    case Format::csv: {
        out << kRatioCsvHeader << '\n';
        std::string row;
        row += std::to_string(graph.order());
        row += ',' + std::to_string(graph.edge_count());
        row += ',' + fmt17(pr.q1);
        row += ',' + fmt17(rep.gamma);
        row += ',' + std::to_string(rep.vmin);
        row += ',' + std::to_string(rep.vmax);
        row += ',' + path_string(rep.path);
        row += ',' + std::to_string(rep.pendant_prefix);
        row += ',' + std::to_string(pr.iterations);
        row += ',' + fmt17(pr.residual);
        row += ',';
        row += yesno(pr.converged);
        row += ',';
        row += yesno(pr.underflow_risk);
        row += ',';
        row += yesno(rep.log_space_recommended);
        out << row << '\n';
        break;
    }
    case Format::table:
        kv(out, "n", std::to_string(graph.order()));
        kv(out, "edges", std::to_string(graph.edge_count()));
        kv(out, "q1", fmt12(pr.q1));
        kv(out, "gamma", fmt12(rep.gamma));
        kv(out, "vmin", std::to_string(rep.vmin));
        kv(out, "vmax", std::to_string(rep.vmax));
        kv(out, "path", path_string(rep.path));
        kv(out, "pendant_prefix", std::to_string(rep.pendant_prefix));
        kv(out, "iterations", std::to_string(pr.iterations));
        kv(out, "residual", fmt12(pr.residual));
        kv(out, "converged", yesno(pr.converged));
        kv(out, "underflow_risk", yesno(pr.underflow_risk));
        kv(out, "log_space_recommended", yesno(rep.log_space_recommended));
        break;
    }
    return 0;
}

// ---- kite -----------------------------------------------------------------

int cmd_kite(std::uint32_t n, std::uint32_t k, const std::string& mode,
             const GlobalOpts& g, std::ostream& out) {
    Scale scale = Scale::linear;
    if (mode == "log" || (mode == "auto" && k > 100)) scale = Scale::log;
    const double value = kite_gamma(n, k, scale);
    PerronOptions popt;
    popt.tol = g.tol;
    const PerronResult pr = perron(build_kite(n, k), popt);
    const bool log_mode = scale == Scale::log;
    switch (g.format()) {
    case Format::json: {
        ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["mode"] = log_mode ? "log" : "linear";
        j["q1"] = pr.q1;
        j["gamma"] = log_mode ? ordered_json() : ordered_json(value);
        j["log_gamma"] = log_mode ? ordered_json(value) : ordered_json();
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "n,k,mode,q1,gamma,log_gamma\n";
        out << n << ',' << k << ',' << (log_mode ? "log" : "linear") << ','
            << fmt17(pr.q1) << ',' << (log_mode ? "" : fmt17(value)) << ','
            << (log_mode ? fmt17(value) : "") << '\n';
        break;
    case Format::table:
        kv(out, "n", std::to_string(n));
        kv(out, "k", std::to_string(k));
        kv(out, "mode", log_mode ? "log" : "linear");
        kv(out, "q1", fmt12(pr.q1));
        kv(out, log_mode ? "log_gamma" : "gamma", fmt12(value));
        break;
    }
    return 0;
}

// ---- best-kite ------------------------------------------------------------

int cmd_best_kite(std::uint32_t n, const GlobalOpts& g, std::ostream& out) {
    const BestKite b = best_kite_k(n);
    switch (g.format()) {
    case Format::json: {
        ordered_json j;
        j["n"] = n;
        j["k_star"] = b.k;
        j["log_gamma"] = b.log_gamma;
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "n,k_star,log_gamma\n";
        out << n << ',' << b.k << ',' << fmt17(b.log_gamma) << '\n';
        break;
    case Format::table:
        kv(out, "n", std::to_string(n));
        kv(out, "k_star", std::to_string(b.k));
        kv(out, "log_gamma", fmt12(b.log_gamma));
        break;
    }
    return 0;
}

// ---- search ---------------------------------------------------------------

struct SearchParams {
    std::uint32_t n = 0;
    std::string input;
    std::uint32_t top = 10;
    std::uint32_t jobs = 0; // 0: hardware concurrency
    std::uint64_t chunks = 0;
    std::string chunk; // "i/m" to run a single shard
};

// "i/m" with 0 <= i < m.
std::pair<std::uint64_t, std::uint64_t> parse_chunk_spec(const std::string& spec) {
    const auto bad = [&] {
        return std::invalid_argument("--chunk expects i/m with 0 <= i < m, got '" +
                                     spec + "'");
    };
    const std::size_t slash = spec.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= spec.size())
        throw bad();
    std::uint64_t i = 0, m = 0;
    try {
        std::size_t used = 0;
        i = std::stoull(spec.substr(0, slash), &used);
        if (used != slash) throw bad();
        const std::string rest = spec.substr(slash + 1);
        m = std::stoull(rest, &used);
        if (used != rest.size()) throw bad();
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    if (i >= m) throw bad();
    return {i, m};
}

void emit_search(std::ostream& out, Format fm, const SearchResult& res) {
    switch (fm) {
    case Format::json:
        out << to_json(res).dump() << '\n';
        break;
    case Format::csv: {
        out << kRankedClassCsvHeader << '\n';
        if (res.ranking.empty()) {
            const RankedClass from_record{res.record.gamma_max,
                                          res.record.argmax_graph6,
                                          res.record.is_kite, res.record.kite_k};
            out << to_csv(from_record, 1) << '\n';
        }
        for (std::size_t i = 0; i < res.ranking.size(); ++i)
            out << to_csv(res.ranking[i], i + 1) << '\n';
        break;
    }
    case Format::table: {
        kv(out, "n", std::to_string(res.record.n));
        kv(out, "graphs_seen", std::to_string(res.graphs_seen));
        kv(out, "disconnected_skipped", std::to_string(res.disconnected_skipped));
        kv(out, "gamma_max", fmt12(res.record.gamma_max));
        kv(out, "argmax_graph6", res.record.argmax_graph6);
        kv(out, "is_kite", yesno(res.record.is_kite));
        kv(out, "kite_k",
           res.record.is_kite ? std::to_string(res.record.kite_k) : std::string("-"));
        if (!res.ranking.empty()) {
            out << '\n';
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-6s %-20s %-20s %-8s %s", "rank",
                          "gamma", "graph6", "is_kite", "kite_k");
            out << buf << '\n';
            for (std::size_t i = 0; i < res.ranking.size(); ++i) {
                const RankedClass& c = res.ranking[i];
                std::snprintf(buf, sizeof buf, "%-6zu %-20s %-20s %-8s %s", i + 1,
                              fmt12(c.gamma).c_str(), c.graph6.c_str(),
                              yesno(c.is_kite),
                              c.is_kite ? std::to_string(c.kite_k).c_str() : "-");
                out << buf << '\n';
            }
        }
        break;
    }
    }
}

int cmd_search(const SearchParams& p, const GlobalOpts& g, std::ostream& out) {
    SearchOptions sopt;
    sopt.top = p.top;
    sopt.chunks = p.chunks;
    sopt.jobs = resolve_jobs(p.jobs);
    sopt.tol = g.tol;

    SearchResult res;
    if (!p.input.empty()) {
        if (!p.chunk.empty())
            throw std::invalid_argument("--chunk applies to native enumeration only");
        if (p.input == "-") {
            res = extremal_search_stream(std::cin, p.n, sopt);
        } else {
            std::ifstream f(p.input);
            if (!f) throw std::invalid_argument("cannot open input file: " + p.input);
            res = extremal_search_stream(f, p.n, sopt);
        }
    } else if (p.n == 0) {
        throw std::invalid_argument(
            "search needs --n (native enumeration, n in [2,7]) or --input");
    } else if (!p.chunk.empty()) {
        const auto [ci, cm] = parse_chunk_spec(p.chunk);
        const std::vector<EnumerationChunk> spans = make_chunks(p.n, cm);
        if (ci >= spans.size())
            throw std::invalid_argument(
                "--chunk index " + std::to_string(ci) + " out of range: only " +
                std::to_string(spans.size()) + " chunks exist at n=" +
                std::to_string(p.n));
        res = extremal_search_range(p.n, spans[ci].begin, spans[ci].end, sopt);
    } else {
        res = extremal_search(p.n, sopt);
    }
    emit_search(out, g.format(), res);
    return 0;
}

// ---- check ----------------------------------------------------------------

struct CheckParams {
    std::string suite;
    std::uint32_t n_max = 0;
    SourceOpts src;
    std::string input;
    std::uint32_t jobs = 0;
};

void emit_tally_summary(std::ostream& out, Format fm, const UniversalTally& t,
                        const std::vector<std::pair<std::string, std::uint64_t>>& head) {
    switch (fm) {
    case Format::json: {
        ordered_json s;
        for (const auto& [key, value] : head) s[key] = value;
        const ordered_json tj = to_json(t);
        for (auto it = tj.begin(); it != tj.end(); ++it) s[it.key()] = it.value();
        out << s.dump() << '\n';
        break;
    }
    case Format::csv:
        break; // CSV stays row-oriented: findings only
    case Format::table:
        for (const auto& [key, value] : head) kv(out, key, std::to_string(value));
        kv(out, "total_violations", std::to_string(t.total_violations()));
        tally_table(out, t);
        break;
    }
}

int cmd_check_universal(const CheckParams& p, const GlobalOpts& g, std::ostream& out) {
    const Format fm = g.format();
    const bool has_source = !p.src.graph6_text.empty() || !p.src.builtin.empty();
    const int sources = (p.n_max > 0) + has_source + !p.input.empty();
    if (sources != 1)
        throw std::invalid_argument(
            "universal suite needs exactly one of --n-max, --graph6/--builtin, "
            "or --input");

    if (fm == Format::csv) out << kLemmaFindingCsvHeader << '\n';
    bool any_violation = false;

    if (p.n_max > 0) {
        if (p.n_max < 2 || p.n_max > kMaxNativeOrder)
            throw std::invalid_argument("--n-max must lie in [2, " +
                                        std::to_string(kMaxNativeOrder) + "]");
        for (std::uint32_t n = 2; n <= p.n_max; ++n) {
            if (fm == Format::table && n > 2) out << '\n';
            SearchOptions sopt;
            sopt.top = 1;
            sopt.jobs = resolve_jobs(p.jobs);
            sopt.tol = g.tol;
            sopt.universal = true;
            const CorpusResult cr = sweep_native_corpus(n, sopt);
            std::vector<LemmaFinding> viols = cr.tally.violations;
            sort_findings(viols);
            emit_findings(out, fm, viols);
            emit_tally_summary(out, fm, cr.tally, {{"n", n}});
            if (cr.tally.total_violations() > 0) any_violation = true;
        }
    } else if (!p.input.empty()) {
        UniversalTally tally;
        std::vector<LemmaFinding> all;
        std::uint64_t skipped = 0;
        PerronOptions popt;
        popt.tol = g.tol;
        const auto sink = [&](const IngestRecord& rec) {
            if (!rec.connected) {
                ++skipped;
                return;
            }
            const PerronResult pr = perron(rec.graph, popt);
            const RatioReport rep = make_ratio_report(rec.graph, pr);
            const UniversalOutcome o = check_universal_outcome(rec.graph, pr, rep);
            tally.add(o, rec.graph);
            for (LemmaFinding& f : findings_from_outcome(o, rec.graph))
                all.push_back(std::move(f));
        };
        if (p.input == "-") {
            ingest_graph6(std::cin, sink, {});
        } else {
            std::ifstream f(p.input);
            if (!f) throw std::invalid_argument("cannot open input file: " + p.input);
            ingest_graph6(f, sink, {});
        }
        sort_findings(all);
        emit_findings(out, fm, all);
        if (fm == Format::table && !all.empty()) out << '\n';
        emit_tally_summary(out, fm, tally,
                           {{"graphs", tally.graphs},
                            {"disconnected_skipped", skipped}});
        any_violation = tally.total_violations() > 0;
    } else {
        const Graph graph = load_source(p.src);
        std::vector<LemmaFinding> fs = check_universal(graph, g.tol);
        sort_findings(fs);
        emit_findings(out, fm, fs);
        for (const LemmaFinding& f : fs)
            if (f.status == LemmaStatus::violated) any_violation = true;
    }
    return any_violation ? 5 : 0;
}

int cmd_check_maximizer(const CheckParams& p, const GlobalOpts& g, std::ostream& out) {
    if (!p.input.empty())
        throw std::invalid_argument(
            "maximizer suite checks a single graph: use --graph6 or --builtin");
    const Graph graph = load_source(p.src);
    const MaximizerDecomposition dec = decompose_maximizer(graph, g.tol);
    std::vector<LemmaFinding> fs = check_maximizer(dec);
    sort_findings(fs);
    const Format fm = g.format();
    if (fm == Format::csv) out << kLemmaFindingCsvHeader << '\n';
    if (fm == Format::table) {
        kv(out, "graph_id", make_graph_id(graph));
        kv(out, "n", std::to_string(graph.order()));
        kv(out, "q1", fmt12(dec.pr.q1));
        kv(out, "gamma", fmt12(dec.report.gamma));
        kv(out, "k", std::to_string(dec.k));
        out << '\n';
    }
    emit_findings(out, fm, fs);
    return 0;
}

int cmd_check(const CheckParams& p, const GlobalOpts& g, std::ostream& out) {
    if (p.suite == "universal") return cmd_check_universal(p, g, out);
    return cmd_check_maximizer(p, g, out);
}

// ---- scan -----------------------------------------------------------------

int cmd_scan(const std::vector<std::uint32_t>& ns, const GlobalOpts& g,
             std::ostream& out) {
    const std::vector<ScanRow> rows = asymptotic_scan(ns, g.tol);
    switch (g.format()) {
    case Format::json:
        for (const ScanRow& r : rows) out << to_json(r).dump() << '\n';
        break;
    case Format::csv:
        out << kScanRowCsvHeader << '\n';
        for (const ScanRow& r : rows) out << to_csv(r) << '\n';
        break;
    case Format::table: {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-8s %-8s %-18s %-18s %-18s %s", "n",
                      "k_star", "log_gamma", "nk_log_ratio", "x_penultimate",
                      "n^(-1/6)");
        out << buf << '\n';
        for (const ScanRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%-8u %-8u %-18s %-18s %-18s %s", r.n,
                          r.k_star, fmt12(r.log_gamma).c_str(),
                          fmt12(r.nk_log_ratio).c_str(),
                          fmt12(r.x_penultimate).c_str(),
                          fmt12(r.n_to_minus_sixth).c_str());
            out << buf << '\n';
        }
        break;
    }
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"principal-ratio toolkit for the signless Laplacian Q = D + A"};
    app.name("qratio");
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--output", g.output, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--tol", g.tol, "eigensolver tolerance, in (0, 1e-3]")
        ->capture_default_str();

    auto* c_ratio = app.add_subcommand("ratio", "principal ratio of one graph");
    c_ratio->fallthrough();
    SourceOpts ratio_src;
    c_ratio->add_option("--graph6", ratio_src.graph6_text, "graph6 string");
    c_ratio->add_option("--builtin", ratio_src.builtin,
                        "path|cycle|complete|star|kite");
    c_ratio->add_option("--n", ratio_src.n, "order for --builtin");
    c_ratio->add_option("--k", ratio_src.k, "kite path length (builtin kite)");

    auto* c_kite = app.add_subcommand("kite", "kite ratio via the scalar recurrence");
    c_kite->fallthrough();
    std::uint32_t kite_n = 0, kite_k = 0;
    std::string kite_mode = "auto";
    c_kite->add_option("--n", kite_n, "kite order")->required();
    c_kite->add_option("--k", kite_k, "kite path length")->required();
    c_kite->add_option("--mode", kite_mode,
                       "linear|log (default: log once k > 100)")
        ->check(CLI::IsMember({"linear", "log", "auto"}));

    auto* c_best =
        app.add_subcommand("best-kite", "ratio-maximizing kite path length");
    c_best->fallthrough();
    std::uint32_t best_n = 0;
    c_best->add_option("--n", best_n, "order, n >= 4")->required();

    auto* c_search =
        app.add_subcommand("search", "extremal search over connected graphs");
    c_search->fallthrough();
    SearchParams sp;
    c_search->add_option("--n", sp.n,
                         "order (native enumeration needs n in [2,7]; with "
                         "--input, enforces the stream's order)");
    c_search->add_option("--input", sp.input, "graph6 file, or - for stdin");
    c_search->add_option("--top", sp.top, "isomorphism classes to rank")
        ->capture_default_str();
    c_search->add_option("--jobs", sp.jobs, "worker threads (default: hardware)");
    c_search->add_option("--chunks", sp.chunks, "shard count for the native sweep");
    c_search->add_option("--chunk", sp.chunk, "i/m: run only shard i of m");

    auto* c_check = app.add_subcommand("check", "inequality checks");
    c_check->fallthrough();
    CheckParams cp;
    c_check->add_option("--suite", cp.suite, "universal|maximizer")
        ->required()
        ->check(CLI::IsMember({"universal", "maximizer"}));
    c_check->add_option("--n-max", cp.n_max,
                        "sweep every connected graph with 2 <= n <= n-max "
                        "(universal suite)");
    c_check->add_option("--graph6", cp.src.graph6_text, "graph6 string");
    c_check->add_option("--builtin", cp.src.builtin,
                        "path|cycle|complete|star|kite");
    c_check->add_option("--n", cp.src.n, "order for --builtin");
    c_check->add_option("--k", cp.src.k, "kite path length (builtin kite)");
    c_check->add_option("--input", cp.input,
                        "graph6 file, or - for stdin (universal suite)");
    c_check->add_option("--jobs", cp.jobs, "worker threads for --n-max sweeps");

    auto* c_scan =
        app.add_subcommand("scan", "asymptotic table for the extremal kites");
    c_scan->fallthrough();
    std::vector<std::uint32_t> scan_ns;
    c_scan->add_option("--n", scan_ns, "comma-separated orders, each >= 10")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!(g.tol > 0.0) || g.tol > 1e-3)
            throw std::invalid_argument("--tol must lie in (0, 1e-3]");
        if (*c_ratio) return cmd_ratio(ratio_src, g, out);
        if (*c_kite) return cmd_kite(kite_n, kite_k, kite_mode, g, out);
        if (*c_best) return cmd_best_kite(best_n, g, out);
        if (*c_search) return cmd_search(sp, g, out);
        if (*c_check) return cmd_check(cp, g, out);
        if (*c_scan) return cmd_scan(scan_ns, g, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Graph6Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NotConnectedError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace qratio::cli

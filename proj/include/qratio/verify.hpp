// Verification layer: decomposes candidate extremal graphs, checks the
// universal ratio/growth inequalities over exhaustive corpora, runs structural
// diagnostics on maximizer candidates, probes the eigenvalue perturbation
// bounds, scans the large-n kite asymptotics, and searches small corpora for
// the extremal principal ratio with a deterministic chunked reduction.
#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qratio/graph.hpp"
#include "qratio/spectral.hpp"

namespace qratio {

// A graph's spectral radius counts as "above 4" for the growth-factor checks
// only past this slack, keeping them clear of the q1 = 4 boundary families.
inline constexpr double kApplyEps = 1e-8;
// Tolerance used to classify q1 <= 4 membership.
inline constexpr double kClassifyEps = 1e-9;
// An inequality finding holds when margin >= -kHoldsRelTol * scale.
inline constexpr double kHoldsRelTol = 1e-9;

// View of a candidate maximizer through the extremal structure: the min->max
// path v_1..v_k plus the off-path mass. Defined for graphs with q1 > 4 and a
// non-constant Perron vector.
struct MaximizerDecomposition {
    Graph g;
    PerronResult pr;
    RatioReport report;
    std::uint32_t k = 0;              // number of vertices on the path
    std::vector<std::uint32_t> c_set; // vertices off the path, ascending
    std::vector<std::uint32_t> s_set; // c_set restricted to neighbors of v_{k-1}
    std::vector<std::uint32_t> t_set; // common neighbors of v_{k-2} and v_k (k >= 3)
};

// Throws DomainError when q1 <= 4 + kApplyEps or the Perron vector is
// constant (regular graph); NotConnectedError on disconnected input.
MaximizerDecomposition decompose_maximizer(const Graph& g, double tol = kDefaultTol);

enum class LemmaId {
    // universal checks (every connected graph)
    ratio_path_bound,   // gamma <= U_{j-1}(q1) / x_{v_j} along the min->max path
    u_growth_sandwich,  // elementary bounds bracket U_{j-1}(q1)
    small_q_families,   // q1 <= 4 exactly for paths, cycles, and the 3-star
    // structural diagnostics for candidate maximizers
    max_entry_degree,      // d(v_k) = n - k + 1
    q_window,              // 2(n-k) < q1 < 2(n-k+1)
    pendant_prefix,        // v_1..v_{k-2} is a pendant path
    norm_window,           // q1/2 - 2 < ||x||^2 < q1/2 + 3 (max-1 scale)
    neighbor_subset_sums,  // |U| - 2 < sum_{v in U} x_v <= |U| for U ⊆ N(v_k)
    antepenultimate_degree, // d(v_{k-2}) = 2
    q_upper_refined,       // q1 < 2(n-k) + 3/2
    penultimate_degree,    // d(v_{k-1}) = 2
};
std::string_view to_string(LemmaId id);

enum class LemmaStatus { holds, violated, not_applicable, diagnostic };
std::string_view to_string(LemmaStatus s);

struct LemmaFinding {
    LemmaId lemma_id = LemmaId::ratio_path_bound;
    std::string graph_id; // canonical graph6 for n <= 10, labeled graph6 otherwise
    LemmaStatus status = LemmaStatus::not_applicable;
    double margin = 0.0;  // signed slack in the units named by `details`
    std::string details;
};

std::string make_graph_id(const Graph& g);

// Compact per-graph result of the universal checks, cheap enough for the
// exhaustive sweeps (no strings attached; findings are built on demand).
struct UniversalOutcome {
    double q1 = 0.0;
    double gamma = 1.0;
    std::uint32_t k = 0; // min->max path length
    LemmaStatus bound_status = LemmaStatus::not_applicable;
    double bound_margin = 0.0; // min over j of (bound_j - gamma)
    double bound_scale = 1.0;  // gamma
    std::uint32_t bound_worst_j = 0;
    LemmaStatus sandwich_status = LemmaStatus::not_applicable;
    double sandwich_margin = 0.0; // worst two-sided slack around U_{j-1}
    double sandwich_scale = 1.0;  // U_{j-1} at the worst j
    std::uint32_t sandwich_worst_j = 0;
    LemmaStatus class_status = LemmaStatus::holds;
    double class_margin = 0.0; // distance from the 4 + eps threshold, signed
    bool family_member = false;
};

UniversalOutcome check_universal_outcome(const Graph& g, const PerronResult& pr,
                                         const RatioReport& rep);

// The three universal findings for one graph (eigensolve included).
std::vector<LemmaFinding> check_universal(const Graph& g, double tol = kDefaultTol);
std::vector<LemmaFinding> findings_from_outcome(const UniversalOutcome& out,
                                                const Graph& g);

// Aggregate of universal outcomes over a corpus. Index order of `counts`
// rows: ratio_path_bound, u_growth_sandwich, small_q_families; columns:
// holds, violated, not_applicable.
struct UniversalTally {
    static constexpr std::size_t kMaxSamples = 100;
    std::uint64_t graphs = 0;
    std::array<std::array<std::uint64_t, 3>, 3> counts{};
    std::array<double, 3> worst_rel{}; // smallest margin/scale seen, +inf if none
    std::vector<LemmaFinding> violations; // capped at kMaxSamples

    UniversalTally();
    void add(const UniversalOutcome& out, const Graph& g);
    void merge(const UniversalTally& other);
    std::uint64_t total_violations() const;
};

// Structural diagnostics of a decomposed candidate (status is always
// `diagnostic`; the margins carry the content, >= 0 meaning "consistent with
// the extremal structure").
std::vector<LemmaFinding> check_maximizer(const MaximizerDecomposition& dec);

// One row of the large-n kite scan.
struct ScanRow {
    std::uint32_t n = 0;
    std::uint32_t k_star = 0;       // best kite path length
    double log_gamma = 0.0;         // log of the best kite's ratio
    double nk_log_ratio = 0.0;      // (n - k*) ln(n) / n, predicted to be Theta(1)
    double x_penultimate = 0.0;     // Perron entry (max-1) at the next-to-last path vertex
    double n_to_minus_sixth = 0.0;  // n^{-1/6}, the predicted ceiling for the above
};
std::vector<ScanRow> asymptotic_scan(std::span<const std::uint32_t> ns,
                                     double tol = kDefaultTol);

enum class EdgeAction { add, remove };

struct ProbeFinding {
    EdgeAction action = EdgeAction::add;
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double q_before = 0.0;
    double q_after = 0.0;
    double rayleigh_delta = 0.0; // +-(x_u + x_v)^2 on the unit Perron vector
    double margin = 0.0;         // (q_after - q_before) - rayleigh_delta
    bool holds = false;          // margin >= -1e-10
};

// Checks the Rayleigh perturbation bound for one edge toggle: adding an edge
// raises q1 by at least (x_u + x_v)^2, removing one lowers it by at most the
// same. Throws std::invalid_argument when the edge state does not match the
// action, NotConnectedError when a removal disconnects the graph.
ProbeFinding perturbation_probe(const Graph& g, std::uint32_t u, std::uint32_t v,
                                EdgeAction action, double tol = kDefaultTol);

// Exact structural kite recognizer (any order): walks the pendant path and
// verifies the clique. k = 1 on complete graphs, k = n-1 on paths.
struct KiteMatch {
    bool is_kite = false;
    std::uint32_t k = 0;
};
KiteMatch match_kite(const Graph& g);

struct ExtremalRecord {
    std::uint32_t n = 0;
    double gamma_max = 1.0;
    std::string argmax_graph6; // canonical for n <= 10, labeled otherwise
    bool is_kite = false;
    std::uint32_t kite_k = 0; // meaningful only when is_kite
};

struct RankedClass {
    double gamma = 1.0;
    std::string graph6; // class key: canonical for n <= 10, labeled otherwise
    bool is_kite = false;
    std::uint32_t kite_k = 0;
};

struct SearchResult {
    ExtremalRecord record;
    std::vector<RankedClass> ranking; // best classes, gamma descending
    std::uint64_t graphs_seen = 0;    // connected graphs evaluated
    std::uint64_t disconnected_skipped = 0; // stream searches only
};

struct SearchOptions {
    std::size_t top = 10;     // ranked classes to report
    std::uint64_t chunks = 0; // 0: pick from jobs
    std::uint32_t jobs = 1;   // worker threads for the native sweep
    double tol = kDefaultTol;
    bool universal = false;   // also tally the universal checks in the same pass
};

struct CorpusResult {
    SearchResult search;
    UniversalTally tally;
    bool universal_checked = false;
};

// One pass over every connected labeled graph on n vertices (n <= 7). The
// reduction is deterministic: results are independent of chunking and thread
// count, because per-graph work is pure and the merge orders candidates by
// the total order (gamma desc, labeled encoding asc).
CorpusResult sweep_native_corpus(std::uint32_t n, const SearchOptions& opt = {});

SearchResult extremal_search(std::uint32_t n, const SearchOptions& opt = {});

// Same sweep restricted to one enumeration-index range, for externally
// partitioned runs; the partial record covers only [begin, end).
SearchResult extremal_search_range(std::uint32_t n, std::uint64_t begin,
                                   std::uint64_t end, const SearchOptions& opt = {});

// Same search over a graph6 stream (one graph per line). All graphs must
// share one order; expect_n = 0 infers it from the first record, a nonzero
// value enforces it. Disconnected records are skipped and counted.
SearchResult extremal_search_stream(std::istream& in, std::uint32_t expect_n = 0,
                                    const SearchOptions& opt = {});

} // namespace qratio

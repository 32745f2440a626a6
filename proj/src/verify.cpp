#include "qratio/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qratio/enumeration.hpp"
#include "qratio/errors.hpp"
#include "qratio/graph6.hpp"
#include "qratio/kite_math.hpp"

namespace qratio {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kProbeTol = 1e-10;

std::string fmt(const char* f, ...) {
    char buf[320];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return std::string(buf);
}

std::uint64_t factorial(std::uint32_t n) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// Family recognizers behind the q1 <= 4 classification. All three assume a
// connected input, which every caller guarantees.
bool is_path_graph(const Graph& g) {
    const std::uint32_t n = g.order();
    if (n == 1) return true;
    if (g.edge_count() != n - 1) return false;
    std::uint32_t ones = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t d = g.degree(v);
        if (d == 1) ++ones;
        else if (d != 2) return false;
    }
    return ones == 2;
}

bool is_cycle_graph(const Graph& g) {
    const std::uint32_t n = g.order();
    if (n < 3 || g.edge_count() != n) return false;
    for (std::uint32_t v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_star3(const Graph& g) {
    if (g.order() != 4 || g.edge_count() != 3) return false;
    std::uint32_t ones = 0, threes = 0;
    for (std::uint32_t v = 0; v < 4; ++v) {
        const std::uint32_t d = g.degree(v);
        if (d == 1) ++ones;
        else if (d == 3) ++threes;
    }
    return ones == 3 && threes == 1;
}

const char* family_name(const Graph& g) {
    if (is_path_graph(g)) return "path";
    if (is_cycle_graph(g)) return "cycle";
    if (is_star3(g)) return "star3";
    return "none";
}

double degree_gap(const Graph& g, std::uint32_t v, std::uint32_t want) {
    const double d = static_cast<double>(g.degree(v));
    return -std::abs(d - static_cast<double>(want)) + 0.0; // never -0.0
}

} // namespace

std::string_view to_string(LemmaId id) {
    switch (id) {
        case LemmaId::ratio_path_bound: return "ratio_path_bound";
        case LemmaId::u_growth_sandwich: return "u_growth_sandwich";
        case LemmaId::small_q_families: return "small_q_families";
        case LemmaId::max_entry_degree: return "max_entry_degree";
        case LemmaId::q_window: return "q_window";
        case LemmaId::pendant_prefix: return "pendant_prefix";
        case LemmaId::norm_window: return "norm_window";
        case LemmaId::neighbor_subset_sums: return "neighbor_subset_sums";
        case LemmaId::antepenultimate_degree: return "antepenultimate_degree";
        case LemmaId::q_upper_refined: return "q_upper_refined";
        case LemmaId::penultimate_degree: return "penultimate_degree";
    }
    return "unknown";
}

std::string_view to_string(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::holds: return "holds";
        case LemmaStatus::violated: return "violated";
        case LemmaStatus::not_applicable: return "not_applicable";
        case LemmaStatus::diagnostic: return "diagnostic";
    }
    return "unknown";
}

std::string make_graph_id(const Graph& g) {
    if (g.order() <= kMaxCanonicalOrder) return canonical_form(g);
    return encode_graph6(g);
}

MaximizerDecomposition decompose_maximizer(const Graph& g, double tol) {
    PerronOptions popt;
    popt.tol = tol;
    MaximizerDecomposition dec{g, perron(g, popt), {}, 0, {}, {}, {}};
    dec.report = make_ratio_report(g, dec.pr);
    if (dec.pr.q1 <= 4.0 + kApplyEps)
        throw DomainError(fmt("decompose_maximizer: needs q1 > 4, got %.12g", dec.pr.q1));
    if (dec.report.vmin == dec.report.vmax)
        throw DomainError("decompose_maximizer: Perron vector is constant (regular graph)");

    const std::uint32_t n = g.order();
    const auto& path = dec.report.path;
    dec.k = static_cast<std::uint32_t>(path.size());
    std::vector<char> on_path(n, 0);
    for (std::uint32_t v : path) on_path[v] = 1;
    for (std::uint32_t v = 0; v < n; ++v)
        if (!on_path[v]) dec.c_set.push_back(v);
    const std::uint32_t v_pen = path[dec.k - 2];
    for (std::uint32_t v : dec.c_set)
        if (g.has_edge(v, v_pen)) dec.s_set.push_back(v);
    if (dec.k >= 3) {
        const std::uint32_t a = path[dec.k - 3];
        const std::uint32_t b = path[dec.k - 1];
        for (std::uint32_t v = 0; v < n; ++v)
            if (g.has_edge(v, a) && g.has_edge(v, b)) dec.t_set.push_back(v);
    }
    return dec;
}

UniversalOutcome check_universal_outcome(const Graph& g, const PerronResult& pr,
                                         const RatioReport& rep) {
    UniversalOutcome out;
    out.q1 = pr.q1;
    out.gamma = rep.gamma;
    out.k = static_cast<std::uint32_t>(rep.path.size());

    out.family_member = is_path_graph(g) || is_cycle_graph(g) || is_star3(g);
    const bool below = pr.q1 <= 4.0 + kClassifyEps;
    out.class_status = (below == out.family_member) ? LemmaStatus::holds : LemmaStatus::violated;
    out.class_margin = out.family_member ? (4.0 + kClassifyEps - pr.q1)
                                         : (pr.q1 - (4.0 + kClassifyEps));

    if (pr.q1 <= 4.0 + kApplyEps) return out; // growth checks need q1 > 4

    const double q = pr.q1;
    const auto& x = pr.x_max1;

    // ratio <= U_{j-1}(q1) / x_{v_j} along the min->max path, rolling recurrence
    {
        double best = kInf;
        std::uint32_t worst = 0;
        double ua = 1.0;     // U_{j-1} at the current j
        double ub = q - 1.0; // U_j
        for (std::uint32_t j = 1; j <= out.k; ++j) {
            const double bound = ua / x[rep.path[j - 1]];
            const double slack = bound - out.gamma;
            if (slack < best) {
                best = slack;
                worst = j;
            }
            const double un = (q - 2.0) * ub - ua;
            ua = ub;
            ub = un;
        }
        out.bound_margin = best;
        out.bound_scale = out.gamma;
        out.bound_worst_j = worst;
        out.bound_status = best >= -kHoldsRelTol * out.gamma ? LemmaStatus::holds
                                                             : LemmaStatus::violated;
    }

    // elementary growth bounds bracket U_{j-1} for j = 2..k
    if (out.k >= 2) {
        double rel_best = kInf;
        std::uint32_t worst = 0;
        double margin = 0.0, scale = 1.0;
        double ujm1 = q - 1.0; // U_{j-1} at j = 2
        double ujm2 = 1.0;     // U_{j-2}
        for (std::uint32_t j = 2; j <= out.k; ++j) {
            const USandwich sw = u_sandwich(q, j);
            const double m = std::min(ujm1 - sw.lower, sw.upper - ujm1);
            const double rel = m / ujm1;
            if (rel < rel_best) {
                rel_best = rel;
                worst = j;
                margin = m;
                scale = ujm1;
            }
            const double un = (q - 2.0) * ujm1 - ujm2;
            ujm2 = ujm1;
            ujm1 = un;
        }
        out.sandwich_margin = margin;
        out.sandwich_scale = scale;
        out.sandwich_worst_j = worst;
        out.sandwich_status = rel_best >= -kHoldsRelTol ? LemmaStatus::holds
                                                        : LemmaStatus::violated;
    }
    return out;
}

std::vector<LemmaFinding> findings_from_outcome(const UniversalOutcome& out, const Graph& g) {
    std::vector<LemmaFinding> res;
    res.reserve(3);
    const std::string id = make_graph_id(g);

    LemmaFinding bound;
    bound.lemma_id = LemmaId::ratio_path_bound;
    bound.graph_id = id;
    bound.status = out.bound_status;
    bound.margin = out.bound_margin;
    bound.details = out.bound_status == LemmaStatus::not_applicable
                        ? fmt("q1=%.12g at or below 4", out.q1)
                        : fmt("worst_j=%u scale=%.12g q1=%.12g k=%u", out.bound_worst_j,
                              out.bound_scale, out.q1, out.k);
    res.push_back(std::move(bound));

    LemmaFinding sw;
    sw.lemma_id = LemmaId::u_growth_sandwich;
    sw.graph_id = id;
    sw.status = out.sandwich_status;
    sw.margin = out.sandwich_margin;
    if (out.sandwich_status == LemmaStatus::not_applicable)
        sw.details = out.q1 <= 4.0 + kApplyEps ? fmt("q1=%.12g at or below 4", out.q1)
                                               : "path too short";
    else
        sw.details = fmt("worst_j=%u scale=%.12g q1=%.12g", out.sandwich_worst_j,
                         out.sandwich_scale, out.q1);
    res.push_back(std::move(sw));

    LemmaFinding cls;
    cls.lemma_id = LemmaId::small_q_families;
    cls.graph_id = id;
    cls.status = out.class_status;
    cls.margin = out.class_margin;
    cls.details = fmt("q1=%.12g family=%s", out.q1, family_name(g));
    res.push_back(std::move(cls));
    return res;
}

std::vector<LemmaFinding> check_universal(const Graph& g, double tol) {
    PerronOptions popt;
    popt.tol = tol;
    const PerronResult pr = perron(g, popt);
    const RatioReport rep = make_ratio_report(g, pr);
    return findings_from_outcome(check_universal_outcome(g, pr, rep), g);
}

namespace {

std::size_t status_col(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::holds: return 0;
        case LemmaStatus::violated: return 1;
        default: return 2;
    }
}

} // namespace

UniversalTally::UniversalTally() { worst_rel.fill(kInf); }

void UniversalTally::add(const UniversalOutcome& out, const Graph& g) {
    ++graphs;
    const LemmaStatus st[3] = {out.bound_status, out.sandwich_status, out.class_status};
    const double margin[3] = {out.bound_margin, out.sandwich_margin, out.class_margin};
    const double scale[3] = {out.bound_scale, out.sandwich_scale, 1.0};
    bool any_violated = false;
    for (std::size_t i = 0; i < 3; ++i) {
        ++counts[i][status_col(st[i])];
        if (st[i] == LemmaStatus::not_applicable) continue;
        const double rel = margin[i] / (scale[i] > 0.0 ? scale[i] : 1.0);
        worst_rel[i] = std::min(worst_rel[i], rel);
        any_violated = any_violated || st[i] == LemmaStatus::violated;
    }
    if (any_violated && violations.size() < kMaxSamples) {
        for (LemmaFinding& f : findings_from_outcome(out, g)) {
            if (f.status == LemmaStatus::violated && violations.size() < kMaxSamples)
                violations.push_back(std::move(f));
        }
    }
}

void UniversalTally::merge(const UniversalTally& other) {
    graphs += other.graphs;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) counts[i][j] += other.counts[i][j];
        worst_rel[i] = std::min(worst_rel[i], other.worst_rel[i]);
    }
    for (const LemmaFinding& f : other.violations) {
        if (violations.size() >= kMaxSamples) break;
        violations.push_back(f);
    }
}

std::uint64_t UniversalTally::total_violations() const {
    return counts[0][1] + counts[1][1] + counts[2][1];
}

std::vector<LemmaFinding> check_maximizer(const MaximizerDecomposition& dec) {
    const Graph& g = dec.g;
    const std::uint32_t n = g.order();
    const std::uint32_t k = dec.k;
    const double q = dec.pr.q1;
    const auto& x = dec.pr.x_max1;
    const auto& path = dec.report.path;
    const std::string id = make_graph_id(g);

    std::vector<LemmaFinding> out;
    out.reserve(8);
    auto push = [&](LemmaId lemma, double margin, std::string details,
                    LemmaStatus st = LemmaStatus::diagnostic) {
        LemmaFinding f;
        f.lemma_id = lemma;
        f.graph_id = id;
        f.status = st;
        f.margin = margin;
        f.details = std::move(details);
        out.push_back(std::move(f));
    };

    const std::uint32_t vk = path[k - 1];
    const std::uint32_t want_deg = n - k + 1;
    push(LemmaId::max_entry_degree, degree_gap(g, vk, want_deg),
         fmt("deg=%u expected=%u", g.degree(vk), want_deg));

    const double lo_q = 2.0 * static_cast<double>(n - k);
    const double hi_q = 2.0 * static_cast<double>(n - k + 1);
    push(LemmaId::q_window, std::min(q - lo_q, hi_q - q),
         fmt("q1=%.12g window=(%.12g, %.12g)", q, lo_q, hi_q));

    const std::uint32_t need_prefix = k >= 2 ? k - 2 : 0;
    push(LemmaId::pendant_prefix,
         static_cast<double>(dec.report.pendant_prefix) - static_cast<double>(need_prefix),
         fmt("prefix=%u needed=%u k=%u", dec.report.pendant_prefix, need_prefix, k));

    double norm2 = 0.0;
    for (double xi : x) norm2 += xi * xi;
    push(LemmaId::norm_window, std::min(norm2 - (q / 2.0 - 2.0), (q / 2.0 + 3.0) - norm2),
         fmt("norm2=%.12g window=(%.12g, %.12g)", norm2, q / 2.0 - 2.0, q / 2.0 + 3.0));

    // sorted prefixes dominate every subset of N(v_k) for both inequality sides
    std::vector<double> nx;
    nx.reserve(g.degree(vk));
    g.for_each_neighbor(vk, [&](std::uint32_t w) { nx.push_back(x[w]); });
    std::sort(nx.begin(), nx.end());
    double subset_margin = kInf;
    double small = 0.0, large = 0.0;
    for (std::size_t s = 1; s <= nx.size(); ++s) {
        small += nx[s - 1];        // s smallest entries: worst case for the lower bound
        large += nx[nx.size() - s]; // s largest entries: worst case for the upper bound
        subset_margin = std::min(subset_margin, small - (static_cast<double>(s) - 2.0));
        subset_margin = std::min(subset_margin, static_cast<double>(s) - large);
    }
    push(LemmaId::neighbor_subset_sums, subset_margin, fmt("deg=%u", g.degree(vk)));

    if (k >= 3)
        push(LemmaId::antepenultimate_degree, degree_gap(g, path[k - 3], 2),
             fmt("deg=%u", g.degree(path[k - 3])));
    else
        push(LemmaId::antepenultimate_degree, 0.0, "path too short",
             LemmaStatus::not_applicable);

    push(LemmaId::q_upper_refined, 2.0 * static_cast<double>(n - k) + 1.5 - q,
         fmt("q1=%.12g cap=%.12g", q, 2.0 * static_cast<double>(n - k) + 1.5));

    push(LemmaId::penultimate_degree, degree_gap(g, path[k - 2], 2),
         fmt("deg=%u", g.degree(path[k - 2])));
    return out;
}

std::vector<ScanRow> asymptotic_scan(std::span<const std::uint32_t> ns, double tol) {
    std::vector<ScanRow> rows;
    rows.reserve(ns.size());
    for (std::uint32_t n : ns) {
        if (n < 10) throw std::invalid_argument("asymptotic_scan: needs n >= 10");
        const BestKite bk = best_kite_k(n);
        const Graph kite = build_kite({n, bk.k});
        PerronOptions popt;
        popt.tol = tol;
        popt.assume_connected = true;
        const PerronResult pr = perron(kite, popt);
        ScanRow row;
        row.n = n;
        row.k_star = bk.k;
        row.log_gamma = bk.log_gamma;
        row.nk_log_ratio =
            static_cast<double>(n - bk.k) * std::log(static_cast<double>(n)) / n;
        row.x_penultimate = pr.x_max1[bk.k - 2];
        row.n_to_minus_sixth = std::pow(static_cast<double>(n), -1.0 / 6.0);
        rows.push_back(row);
    }
    return rows;
}

namespace {

Graph with_edge_toggled(const Graph& g, std::uint32_t u, std::uint32_t v, bool add) {
    const std::uint32_t lo = std::min(u, v), hi = std::max(u, v);
    Graph::Builder b(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        g.for_each_neighbor(i, [&](std::uint32_t j) {
            if (j <= i) return;
            if (!add && i == lo && j == hi) return;
            b.add_edge(i, j);
        });
    }
    if (add) b.add_edge(u, v);
    return std::move(b).build();
}

} // namespace

ProbeFinding perturbation_probe(const Graph& g, std::uint32_t u, std::uint32_t v,
                                EdgeAction action, double tol) {
    const std::uint32_t n = g.order();
    if (u >= n || v >= n) throw std::invalid_argument("perturbation_probe: vertex out of range");
    if (u == v) throw std::invalid_argument("perturbation_probe: u and v must differ");
    const bool present = g.has_edge(u, v);
    if (action == EdgeAction::add && present)
        throw std::invalid_argument("perturbation_probe: edge already present");
    if (action == EdgeAction::remove && !present)
        throw std::invalid_argument("perturbation_probe: edge not present");

    PerronOptions popt;
    popt.tol = tol;
    const PerronResult before = perron(g, popt); // validates connectivity

    const Graph changed = with_edge_toggled(g, u, v, action == EdgeAction::add);
    if (action == EdgeAction::remove && !is_connected(changed))
        throw NotConnectedError(
            fmt("perturbation_probe: removing edge (%u, %u) disconnects the graph", u, v));
    popt.assume_connected = true;
    const PerronResult after = perron(changed, popt);

    ProbeFinding f;
    f.action = action;
    f.u = u;
    f.v = v;
    f.q_before = before.q1;
    f.q_after = after.q1;
    const double s = before.x_unit[u] + before.x_unit[v];
    f.rayleigh_delta = (action == EdgeAction::add ? 1.0 : -1.0) * s * s;
    f.margin = (f.q_after - f.q_before) - f.rayleigh_delta;
    f.holds = f.margin >= -kProbeTol;
    return f;
}

KiteMatch match_kite(const Graph& g) {
    const std::uint32_t n = g.order();
    if (!is_connected(g)) return {};
    if (g.edge_count() == static_cast<std::uint64_t>(n) * (n - 1) / 2)
        return {true, 1}; // complete graph, path degenerates to the single shared vertex

    std::uint32_t v0 = n;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            v0 = v;
            break;
        }
    }
    if (v0 == n) return {};

    std::vector<char> on_path(n, 0);
    on_path[v0] = 1;
    std::uint32_t prev = v0;
    std::uint32_t cur = g.neighbors(v0).front();
    std::uint32_t len = 1;
    while (g.degree(cur) == 2) {
        if (on_path[cur]) return {};
        on_path[cur] = 1;
        ++len;
        std::uint32_t next = n;
        g.for_each_neighbor(cur, [&](std::uint32_t w) {
            if (w != prev) next = w;
        });
        prev = cur;
        cur = next;
    }
    if (on_path[cur]) return {};
    on_path[cur] = 1;
    ++len;

    if (g.degree(cur) == 1) {
        // no branch vertex at all: the graph is a path
        return len == n ? KiteMatch{true, n - 1} : KiteMatch{};
    }

    const std::uint32_t k = len;
    const std::uint32_t s = n - k + 1;
    if (s < 3) return {};
    std::vector<std::uint32_t> clique;
    clique.reserve(s);
    for (std::uint32_t v = 0; v < n; ++v)
        if (!on_path[v] || v == cur) clique.push_back(v);
    if (clique.size() != s) return {};
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j])) return {};
    const std::uint64_t want =
        static_cast<std::uint64_t>(k - 1) + static_cast<std::uint64_t>(s) * (s - 1) / 2;
    if (g.edge_count() != want) return {};
    return {true, k};
}

namespace {

struct TopEntry {
    double gamma = 1.0;
    std::string g6;
};

// total order over candidates: larger ratio first, ties by encoding
bool entry_better(const TopEntry& a, const TopEntry& b) {
    if (a.gamma != b.gamma) return a.gamma > b.gamma;
    return a.g6 < b.g6;
}

// bounded best-candidates buffer; the root of the heap is the worst kept entry
class TopKeeper {
public:
    explicit TopKeeper(std::size_t cap) : cap_(cap) {}

    void offer(double gamma, const Graph& g) {
        if (cap_ == 0) return;
        if (heap_.size() < cap_) {
            heap_.push_back({gamma, encode_graph6(g)});
            std::push_heap(heap_.begin(), heap_.end(), entry_better);
            return;
        }
        const TopEntry& worst = heap_.front();
        if (gamma < worst.gamma) return;
        TopEntry cand{gamma, encode_graph6(g)};
        if (!entry_better(cand, worst)) return;
        std::pop_heap(heap_.begin(), heap_.end(), entry_better);
        heap_.back() = std::move(cand);
        std::push_heap(heap_.begin(), heap_.end(), entry_better);
    }

    std::vector<TopEntry> take() && { return std::move(heap_); }

private:
    std::size_t cap_;
    std::vector<TopEntry> heap_;
};

std::size_t keeper_cap(std::uint32_t n, std::size_t top) {
    const std::size_t t = std::max<std::size_t>(top, 1);
    // a class on n vertices has at most n! labelings, so this buffer provably
    // contains every labeling needed to rank the best `top` classes (n <= 7)
    if (n <= kMaxNativeOrder) return t * factorial(n);
    if (n <= kMaxCanonicalOrder) return t * 64; // headroom for mild duplication
    return t;
}

struct ChunkOutput {
    std::vector<TopEntry> top;
    UniversalTally tally;
    std::uint64_t graphs = 0;
    std::exception_ptr error;
};

void run_native_chunk(std::uint32_t n, std::uint64_t begin, std::uint64_t end,
                      const SearchOptions& opt, std::size_t cap, ChunkOutput& out) {
    try {
        TopKeeper keeper(cap);
        PerronOptions popt;
        popt.tol = opt.tol;
        popt.assume_connected = true;
        for_each_connected(n, begin, end, [&](const Graph& g, std::uint64_t) {
            const PerronResult pr = perron(g, popt);
            const RatioReport rep = make_ratio_report(g, pr);
            keeper.offer(rep.gamma, g);
            if (opt.universal) out.tally.add(check_universal_outcome(g, pr, rep), g);
            ++out.graphs;
        });
        out.top = std::move(keeper).take();
    } catch (...) {
        out.error = std::current_exception();
    }
}

SearchResult finalize_search(std::uint32_t n, std::vector<TopEntry>&& entries,
                             std::size_t top) {
    if (entries.empty()) throw std::runtime_error("search: no connected graphs seen");
    const bool canon = n <= kMaxCanonicalOrder;
    SearchResult res;
    res.record.n = n;

    // kite identification: match class keys against the built kites when the
    // canonical form is available, otherwise recognize the shape directly
    std::vector<std::pair<std::string, std::uint32_t>> kite_forms;
    if (canon && n >= 2) {
        for (std::uint32_t k = 1; k < n; ++k)
            kite_forms.emplace_back(canonical_form(build_kite({n, k})), k);
    }
    auto classify = [&](const std::string& key, const Graph& g) -> KiteMatch {
        if (!canon) return match_kite(g);
        for (const auto& [form, k] : kite_forms)
            if (form == key) return {true, k};
        return {};
    };

    std::set<std::string> seen;
    const std::size_t want = std::max<std::size_t>(top, 1);
    for (TopEntry& e : entries) {
        const Graph g = decode_graph6(e.g6);
        std::string key = canon ? canonical_form(g) : std::move(e.g6);
        if (!seen.insert(key).second) continue;
        const KiteMatch m = classify(key, g);
        res.ranking.push_back({e.gamma, std::move(key), m.is_kite, m.k});
        if (res.ranking.size() >= want) break;
    }

    const RankedClass& best = res.ranking.front();
    res.record.gamma_max = best.gamma;
    res.record.argmax_graph6 = best.graph6;
    res.record.is_kite = best.is_kite;
    res.record.kite_k = best.kite_k;
    if (top == 0) res.ranking.clear();
    return res;
}

} // namespace

CorpusResult sweep_native_corpus(std::uint32_t n, const SearchOptions& opt) {
    if (n < 2 || n > kMaxNativeOrder)
        throw std::invalid_argument("sweep_native_corpus: n must be in [2, 7]");
    const std::uint32_t jobs = std::max<std::uint32_t>(opt.jobs, 1);
    const std::uint64_t parts = opt.chunks ? opt.chunks : static_cast<std::uint64_t>(jobs) * 4;
    const std::vector<EnumerationChunk> spans = make_chunks(n, parts);
    const std::size_t cap = keeper_cap(n, opt.top);

    std::vector<ChunkOutput> outputs(spans.size());
    if (jobs == 1 || spans.size() == 1) {
        for (std::size_t i = 0; i < spans.size(); ++i)
            run_native_chunk(n, spans[i].begin, spans[i].end, opt, cap, outputs[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(jobs, spans.size());
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= spans.size()) break;
                    run_native_chunk(n, spans[i].begin, spans[i].end, opt, cap, outputs[i]);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    for (const ChunkOutput& o : outputs)
        if (o.error) std::rethrow_exception(o.error);

    // deterministic reduction: merging is independent of the chunking because
    // each chunk keeps its own full-capacity buffer and the final order is total
    CorpusResult result;
    std::vector<TopEntry> all;
    for (ChunkOutput& o : outputs) {
        result.search.graphs_seen += o.graphs;
        if (opt.universal) result.tally.merge(o.tally);
        for (TopEntry& e : o.top) all.push_back(std::move(e));
    }
    std::sort(all.begin(), all.end(), entry_better);
    if (all.size() > cap) all.resize(cap);

    const std::uint64_t graphs_seen = result.search.graphs_seen;
    result.search = finalize_search(n, std::move(all), opt.top);
    result.search.graphs_seen = graphs_seen;
    result.universal_checked = opt.universal;
    return result;
}

SearchResult extremal_search(std::uint32_t n, const SearchOptions& opt) {
    SearchOptions o = opt;
    o.universal = false;
    return sweep_native_corpus(n, o).search;
}

SearchResult extremal_search_range(std::uint32_t n, std::uint64_t begin, std::uint64_t end,
                                   const SearchOptions& opt) {
    SearchOptions o = opt;
    o.universal = false;
    ChunkOutput chunk;
    run_native_chunk(n, begin, end, o, keeper_cap(n, o.top), chunk);
    if (chunk.error) std::rethrow_exception(chunk.error);
    std::sort(chunk.top.begin(), chunk.top.end(), entry_better);
    SearchResult res = finalize_search(n, std::move(chunk.top), o.top);
    res.graphs_seen = chunk.graphs;
    return res;
}

SearchResult extremal_search_stream(std::istream& in, std::uint32_t expect_n,
                                    const SearchOptions& opt) {
    std::uint32_t n = expect_n;
    std::optional<TopKeeper> keeper;
    std::uint64_t connected = 0, skipped = 0;
    PerronOptions popt;
    popt.tol = opt.tol;
    popt.assume_connected = true;

    ingest_graph6(
        in,
        [&](const IngestRecord& rec) {
            if (n == 0) n = rec.graph.order();
            // ingest_graph6 prefixes "line N: " when rethrowing.
            if (rec.graph.order() != n)
                throw Graph6Error(fmt("order %u does not match %u",
                                      rec.graph.order(), n));
            if (!rec.connected) {
                ++skipped;
                return;
            }
            if (!keeper) keeper.emplace(keeper_cap(n, opt.top));
            const PerronResult pr = perron(rec.graph, popt);
            const RatioReport rep = make_ratio_report(rec.graph, pr);
            keeper->offer(rep.gamma, rec.graph);
            ++connected;
        },
        IngestOptions{});

    if (!keeper) throw std::runtime_error("search: no connected graphs seen");
    std::vector<TopEntry> entries = std::move(*keeper).take();
    std::sort(entries.begin(), entries.end(), entry_better);
    SearchResult res = finalize_search(n, std::move(entries), opt.top);
    res.graphs_seen = connected;
    res.disconnected_skipped = skipped;
    return res;
}

} // namespace qratio

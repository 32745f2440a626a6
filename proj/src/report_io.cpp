#include "qratio/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace qratio {

namespace {

using nlohmann::ordered_json;

// JSON has no inf/nan literals; emit null there, matching the dump() behavior
// nlohmann applies to non-finite values anyway.
ordered_json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

ordered_json to_json(const LemmaFinding& f) {
    return ordered_json{{"lemma_id", to_string(f.lemma_id)},
                        {"graph_id", f.graph_id},
                        {"status", to_string(f.status)},
                        {"margin", num(f.margin)},
                        {"details", f.details}};
}

ordered_json to_json(const ExtremalRecord& r) {
    ordered_json j{{"n", r.n},
                   {"gamma_max", num(r.gamma_max)},
                   {"argmax_graph6", r.argmax_graph6},
                   {"is_kite", r.is_kite}};
    if (r.is_kite)
        j["kite_k"] = r.kite_k;
    else
        j["kite_k"] = nullptr;
    return j;
}

ordered_json to_json(const RankedClass& c, std::size_t rank) {
    ordered_json j{{"rank", rank},
                   {"gamma", num(c.gamma)},
                   {"graph6", c.graph6},
                   {"is_kite", c.is_kite}};
    if (c.is_kite)
        j["kite_k"] = c.kite_k;
    else
        j["kite_k"] = nullptr;
    return j;
}

ordered_json to_json(const SearchResult& s) {
    ordered_json ranking = ordered_json::array();
    for (std::size_t i = 0; i < s.ranking.size(); ++i)
        ranking.push_back(to_json(s.ranking[i], i + 1));
    return ordered_json{{"record", to_json(s.record)},
                        {"ranking", std::move(ranking)},
                        {"graphs_seen", s.graphs_seen},
                        {"disconnected_skipped", s.disconnected_skipped}};
}

ordered_json to_json(const ScanRow& r) {
    return ordered_json{{"n", r.n},
                        {"k_star", r.k_star},
                        {"log_gamma", num(r.log_gamma)},
                        {"nk_log_ratio", num(r.nk_log_ratio)},
                        {"x_penultimate", num(r.x_penultimate)},
                        {"n_to_minus_sixth", num(r.n_to_minus_sixth)}};
}

ordered_json to_json(const ProbeFinding& p) {
    return ordered_json{{"action", p.action == EdgeAction::add ? "add" : "remove"},
                        {"u", p.u},
                        {"v", p.v},
                        {"q_before", num(p.q_before)},
                        {"q_after", num(p.q_after)},
                        {"rayleigh_delta", num(p.rayleigh_delta)},
                        {"margin", num(p.margin)},
                        {"holds", p.holds}};
}

ordered_json to_json(const UniversalTally& t) {
    static const LemmaId ids[3] = {LemmaId::ratio_path_bound, LemmaId::u_growth_sandwich,
                                   LemmaId::small_q_families};
    ordered_json lemmas = ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        lemmas.push_back(ordered_json{{"lemma_id", to_string(ids[i])},
                                      {"holds", t.counts[i][0]},
                                      {"violated", t.counts[i][1]},
                                      {"not_applicable", t.counts[i][2]},
                                      {"worst_rel", num(t.worst_rel[i])}});
    }
    return ordered_json{{"graphs", t.graphs},
                        {"total_violations", t.total_violations()},
                        {"lemmas", std::move(lemmas)}};
}

ordered_json ratio_to_json(const Graph& g, const PerronResult& pr, const RatioReport& rep) {
    return ordered_json{{"n", g.order()},
                        {"edges", g.edge_count()},
                        {"q1", num(pr.q1)},
                        {"gamma", num(rep.gamma)},
                        {"vmin", rep.vmin},
                        {"vmax", rep.vmax},
                        {"path", rep.path},
                        {"pendant_prefix", rep.pendant_prefix},
                        {"iterations", pr.iterations},
                        {"residual", num(pr.residual)},
                        {"converged", pr.converged},
                        {"underflow_risk", pr.underflow_risk},
                        {"log_space_recommended", rep.log_space_recommended}};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(const LemmaFinding& f) {
    std::string row;
    row += to_string(f.lemma_id);
    row += ',';
    row += csv_escape(f.graph_id);
    row += ',';
    row += to_string(f.status);
    row += ',';
    row += g17(f.margin);
    row += ',';
    row += csv_escape(f.details);
    return row;
}

std::string to_csv(const RankedClass& c, std::size_t rank) {
    std::string row = std::to_string(rank);
    row += ',';
    row += g17(c.gamma);
    row += ',';
    row += csv_escape(c.graph6);
    row += ',';
    row += c.is_kite ? "true" : "false";
    row += ',';
    if (c.is_kite) row += std::to_string(c.kite_k);
    return row;
}

std::string to_csv(const ScanRow& r) {
    std::string row = std::to_string(r.n);
    row += ',';
    row += std::to_string(r.k_star);
    row += ',';
    row += g17(r.log_gamma);
    row += ',';
    row += g17(r.nk_log_ratio);
    row += ',';
    row += g17(r.x_penultimate);
    row += ',';
    row += g17(r.n_to_minus_sixth);
    return row;
}

std::string to_csv(const ProbeFinding& p) {
    std::string row = p.action == EdgeAction::add ? "add" : "remove";
    row += ',';
    row += std::to_string(p.u);
    row += ',';
    row += std::to_string(p.v);
    row += ',';
    row += g17(p.q_before);
    row += ',';
    row += g17(p.q_after);
    row += ',';
    row += g17(p.rayleigh_delta);
    row += ',';
    row += g17(p.margin);
    row += ',';
    row += p.holds ? "true" : "false";
    return row;
}

} // namespace qratio

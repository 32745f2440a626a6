// JSON and CSV renderings of the report types. JSON objects use a stable
// field order and the shortest round-trip double form; CSV uses a fixed
// "%.17g" so repeated runs are byte-identical. Non-finite doubles become
// JSON null (and "inf"/"nan" text in CSV).
#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "qratio/spectral.hpp"
#include "qratio/verify.hpp"

namespace qratio {

nlohmann::ordered_json to_json(const LemmaFinding& f);
nlohmann::ordered_json to_json(const ExtremalRecord& r);
nlohmann::ordered_json to_json(const RankedClass& c, std::size_t rank);
nlohmann::ordered_json to_json(const SearchResult& s);
nlohmann::ordered_json to_json(const ScanRow& r);
nlohmann::ordered_json to_json(const ProbeFinding& p);
nlohmann::ordered_json to_json(const UniversalTally& t);

// the `ratio` report: graph shape plus the Perron data behind gamma
nlohmann::ordered_json ratio_to_json(const Graph& g, const PerronResult& pr,
                                     const RatioReport& rep);

// RFC-4180 field quoting (applied only when the text needs it)
std::string csv_escape(const std::string& field);

inline constexpr const char* kLemmaFindingCsvHeader =
    "lemma_id,graph_id,status,margin,details";
inline constexpr const char* kRankedClassCsvHeader = "rank,gamma,graph6,is_kite,kite_k";
inline constexpr const char* kScanRowCsvHeader =
    "n,k_star,log_gamma,nk_log_ratio,x_penultimate,n_to_minus_sixth";
inline constexpr const char* kProbeCsvHeader =
    "action,u,v,q_before,q_after,rayleigh_delta,margin,holds";

std::string to_csv(const LemmaFinding& f);
std::string to_csv(const RankedClass& c, std::size_t rank);
std::string to_csv(const ScanRow& r);
std::string to_csv(const ProbeFinding& p);

} // namespace qratio

// Scalar machinery behind the kite-graph extremal results: the growth factor
// sigma(q), the U_i sequence whose value at the spectral radius equals the
// kite's principal ratio, elementary sandwich bounds on U, and the path bound
// tying all of it to an arbitrary graph's Perron vector. Everything lives on
// the domain q > 4 (spectral radii of the relevant non-regular graphs).
#pragma once

#include <cstdint>
#include <vector>

#include "qratio/graph.hpp"
#include "qratio/spectral.hpp"

namespace qratio {

// Larger root of s^2 - (q-2)s + 1 = 0. Satisfies s + 1/s = q - 2 and
// s - 1/s = sqrt(q(q-4)); exceeds 1 exactly when q > 4.
struct SigmaValue {
    double q = 0.0;
    double sigma = 0.0;
};
SigmaValue sigma(double q); // throws DomainError if q <= 4

// sigma(q) - 1 without cancellation as q -> 4+.
double sigma_minus_one(double q);

// log(sigma(q)), accurate near q = 4 via log1p.
double log_sigma(double q);

enum class Scale { linear, log };

// U_0 = 1, U_1 = q - 1, U_{i+1} = (q-2) U_i - U_{i-1}. Strictly increasing in
// i for q > 4 (and in q for fixed i).
struct USequence {
    double q = 0.0;
    Scale scale = Scale::linear;
    std::vector<double> values; // U_0 .. U_m
};

// The recurrence, verbatim. Throws OverflowError once values leave double
// range (callers should switch to log_u).
USequence u_recurrence(double q, std::uint32_t m);

// Single U_i by the same recurrence.
double u_value(double q, std::uint32_t i);

// U_i = (s^{i+1} - s^{-(i+1)} + s^i - s^{-i}) / (s - 1/s) with s = sigma(q).
double u_closed_form(double q, std::uint32_t i);

// log U_i evaluated without forming U_i:
//   (i+1) log s + log1p(1/s) + log1p(-s^{-(2i+1)}) - log(q(q-4))/2.
// Stays finite far beyond the linear route's overflow point.
double log_u(double q, std::uint32_t i);

struct USandwich {
    double lower = 0.0;
    double upper = 0.0;
};

// Elementary bounds for j >= 2:
//   (q-1)(q-2-1/(q-3))^{j-2} <= U_{j-1} <= (q-1)(q-2-1/q)^{j-2}.
// Equality of the two sides at j = 2. Throws DomainError (q <= 4),
// std::invalid_argument (j < 2), OverflowError (bounds leave double range).
USandwich u_sandwich(double q, std::uint32_t j);

// Upper bound on the principal ratio read off position j of the min->max
// path: gamma <= U_{j-1}(q1) / x_{v_j} with x the max-1 Perron vector and
// v_j = rep.path[j-1] (1-based j). Exact equality when v_1..v_j is a pendant
// path. Requires q1 > 4 (DomainError) and 1 <= j <= path length.
double gamma_upper_bound(const Graph& g, const PerronResult& pr,
                         const RatioReport& rep, std::uint32_t j);

// Principal ratio of the kite via the scalar route: gamma = U_{k-1}(q1).
// k = 1 gives the complete graph (gamma = 1); otherwise the clique must have
// at least 3 vertices so that q1 > 4 (DomainError if not, i.e. k = n-1).
// Scale::linear returns gamma itself (OverflowError past double range);
// Scale::log returns log gamma.
double kite_gamma(std::uint32_t n, std::uint32_t k, Scale scale = Scale::linear);

struct BestKite {
    std::uint32_t k = 0;
    double log_gamma = 0.0;
};

// Maximizes the kite's gamma over k in [2, n-2] (computed on the log scale so
// large n cannot overflow; ties resolve to the smaller k). Requires n >= 4.
BestKite best_kite_k(std::uint32_t n);

} // namespace qratio

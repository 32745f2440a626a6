// Perron eigenpair of the signless Laplacian Q = D + A (matrix-free power
// iteration) and the principal-ratio report derived from it.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qratio/graph.hpp"

namespace qratio {

inline constexpr double kDefaultTol = 1e-12;

// Entries of the max-normalized eigenvector below this are treated as
// numerically underflowed: excluded from entrywise convergence checks and
// reported via PerronResult::underflow_risk.
inline constexpr double kUnderflowFloor = 1e-250;

// y = (D + A) x. The span length must equal g.order().
std::vector<double> q_matvec(const Graph& g, std::span<const double> x);

struct PerronOptions {
    double tol = kDefaultTol;
    std::size_t max_iter = 0;      // 0 means 200 n + 10000
    bool assume_connected = false; // skip the connectivity precheck (hot loops)
};

struct PerronResult {
    double q1 = 0.0;              // Rayleigh quotient of the returned vector
    std::vector<double> x_unit;   // ||x||_2 = 1, entries > 0
    std::vector<double> x_max1;   // same vector rescaled to max entry exactly 1
    double residual = 0.0;        // ||Qx - q1 x||_inf / q1
    std::size_t iterations = 0;
    bool converged = false;       // false means the iteration cap was hit
    bool underflow_risk = false;  // some x_max1 entry below kUnderflowFloor
};

// Power iteration on Q starting from the degree+1 vector. Connectivity makes
// Q irreducible with period 1 (the diagonal is positive), so the iteration
// converges to the unique positive Perron vector; convergence requires BOTH
// the infinity-norm residual and the per-entry relative residual
// max_v |(Qx)_v / (q1 x_v) - 1| to drop below tol, which certifies the small
// entries to the same relative accuracy as the large ones. Throws
// NotConnectedError on disconnected input.
PerronResult perron(const Graph& g, const PerronOptions& opt);
PerronResult perron(const Graph& g, double tol = kDefaultTol,
                    std::size_t max_iter = 0);

struct RatioReport {
    double gamma = 1.0;              // max entry / min entry, >= 1
    std::uint32_t vmin = 0;          // argmin of the Perron vector (lowest index on ties)
    std::uint32_t vmax = 0;          // argmax (lowest index on ties)
    std::vector<std::uint32_t> path; // shortest path vmin -> vmax
    std::uint32_t pendant_prefix = 0; // pendant prefix length of that path
    bool log_space_recommended = false; // min entries underflow; gamma may be inf
};

// Builds the report from a converged eigensolve; throws NoConvergenceError if
// pr.converged is false.
RatioReport make_ratio_report(const Graph& g, const PerronResult& pr);

// perron + make_ratio_report in one call.
RatioReport principal_ratio(const Graph& g, double tol = kDefaultTol);

} // namespace qratio

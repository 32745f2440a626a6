#include "qratio/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qratio/errors.hpp"

namespace qratio {

namespace {

void q_matvec_into(const Graph& g, const double* x, double* y) {
    const std::uint32_t n = g.order();
    const std::uint32_t* deg = g.degrees().data();
    for (std::uint32_t v = 0; v < n; ++v) {
        double acc = double(deg[v]) * x[v];
        g.for_each_neighbor(v, [&](std::uint32_t u) { acc += x[u]; });
        y[v] = acc;
    }
}

double unit_normalize(std::vector<double>& x) {
    double ss = 0.0;
    for (double v : x) ss += v * v;
    const double norm = std::sqrt(ss);
    for (double& v : x) v /= norm;
    return norm;
}

} // namespace

std::vector<double> q_matvec(const Graph& g, std::span<const double> x) {
    if (x.size() != g.order())
        throw std::invalid_argument("q_matvec: vector length " + std::to_string(x.size()) +
                                    " does not match graph order " +
                                    std::to_string(g.order()));
    std::vector<double> y(g.order());
    q_matvec_into(g, x.data(), y.data());
    return y;
}

PerronResult perron(const Graph& g, const PerronOptions& opt) {
    const std::uint32_t n = g.order();
    if (!opt.assume_connected && !is_connected(g))
        throw NotConnectedError("perron requires a connected graph");
    if (!(opt.tol > 0.0))
        throw std::invalid_argument("perron tolerance must be positive");

    PerronResult r;
    if (n == 1) {
        // Q of the single vertex is the 1x1 zero matrix.
        r.q1 = 0.0;
        r.x_unit = {1.0};
        r.x_max1 = {1.0};
        r.converged = true;
        return r;
    }

    const std::size_t limit = opt.max_iter ? opt.max_iter : (200 * std::size_t(n) + 10000);
    std::vector<double> x(n), y(n);
    for (std::uint32_t v = 0; v < n; ++v) x[v] = double(g.degree(v)) + 1.0;
    unit_normalize(x);

    double theta = 0.0;
    double theta_prev = 0.0;
    double res_inf = 0.0;
    std::size_t it = 0;
    bool converged = false;
    while (true) {
        ++it;
        q_matvec_into(g, x.data(), y.data());
        theta = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) theta += x[v] * y[v]; // ||x|| = 1
        // Q is positive semidefinite, so the Rayleigh quotient of power
        // iterates is non-decreasing; a real drop means a numerics bug.
        if (theta < theta_prev * (1.0 - 1e-13))
            throw std::logic_error("perron: Rayleigh quotient decreased from " +
                                   std::to_string(theta_prev) + " to " +
                                   std::to_string(theta));
        theta_prev = theta;

        double xmax = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) xmax = std::max(xmax, x[v]);
        const double floor = xmax * kUnderflowFloor;
        res_inf = 0.0;
        double res_entry = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) {
            res_inf = std::max(res_inf, std::abs(y[v] - theta * x[v]));
            if (x[v] > floor)
                res_entry = std::max(res_entry, std::abs(y[v] / (theta * x[v]) - 1.0));
        }
        res_inf /= theta;
        if (res_inf <= opt.tol && res_entry <= opt.tol) {
            converged = true;
            break;
        }
        if (it >= limit) break; // keep x as the vector the residual describes
        x.swap(y);
        unit_normalize(x);
    }

    unit_normalize(x); // tidy rounding drift from the q1 = x.Qx step
    r.q1 = theta;
    r.residual = res_inf;
    r.iterations = it;
    r.converged = converged;

    std::uint32_t amax = 0;
    for (std::uint32_t v = 1; v < n; ++v)
        if (x[v] > x[amax]) amax = v;
    r.x_max1.resize(n);
    const double xmax = x[amax];
    for (std::uint32_t v = 0; v < n; ++v) {
        r.x_max1[v] = x[v] / xmax;
        if (r.x_max1[v] < kUnderflowFloor) r.underflow_risk = true;
    }
    r.x_unit = std::move(x);
    return r;
}

PerronResult perron(const Graph& g, double tol, std::size_t max_iter) {
    return perron(g, PerronOptions{tol, max_iter, false});
}

RatioReport make_ratio_report(const Graph& g, const PerronResult& pr) {
    if (!pr.converged)
        throw NoConvergenceError("eigensolve did not converge: residual " +
                                 std::to_string(pr.residual) + " after " +
                                 std::to_string(pr.iterations) + " iterations");
    if (pr.x_max1.size() != g.order())
        throw std::invalid_argument("make_ratio_report: eigenvector/graph size mismatch");

    RatioReport rep;
    const std::uint32_t n = g.order();
    std::uint32_t vmin = 0, vmax = 0;
    for (std::uint32_t v = 1; v < n; ++v) {
        if (pr.x_max1[v] < pr.x_max1[vmin]) vmin = v;
        if (pr.x_max1[v] > pr.x_max1[vmax]) vmax = v;
    }
    rep.vmin = vmin;
    rep.vmax = vmax;
    rep.gamma = pr.x_max1[vmax] / pr.x_max1[vmin];
    rep.path = shortest_path(g, vmin, vmax);
    rep.pendant_prefix = pendant_prefix_length(g, rep.path);
    rep.log_space_recommended = pr.underflow_risk;
    return rep;
}

RatioReport principal_ratio(const Graph& g, double tol) {
    return make_ratio_report(g, perron(g, tol));
}

} // namespace qratio

#include "qratio/kite_math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qratio/errors.hpp"

namespace qratio {

namespace {

void require_q_above_4(double q, const char* where) {
    if (!(q > 4.0))
        throw DomainError(std::string(where) + " requires q > 4, got q = " +
                          std::to_string(q));
}

} // namespace

SigmaValue sigma(double q) {
    require_q_above_4(q, "sigma");
    return SigmaValue{q, (q - 2.0 + std::sqrt(q * (q - 4.0))) / 2.0};
}

double sigma_minus_one(double q) {
    require_q_above_4(q, "sigma");
    // (q-4) and sqrt(q(q-4)) are both >= 0: no cancellation as q -> 4+.
    return (q - 4.0 + std::sqrt(q * (q - 4.0))) / 2.0;
}

double log_sigma(double q) { return std::log1p(sigma_minus_one(q)); }

USequence u_recurrence(double q, std::uint32_t m) {
    require_q_above_4(q, "u_recurrence");
    USequence seq;
    seq.q = q;
    seq.scale = Scale::linear;
    seq.values.reserve(std::size_t(m) + 1);
    seq.values.push_back(1.0);
    if (m >= 1) seq.values.push_back(q - 1.0);
    for (std::uint32_t i = 2; i <= m; ++i) {
        const double next =
            (q - 2.0) * seq.values[i - 1] - seq.values[i - 2];
        if (!std::isfinite(next))
            throw OverflowError("u_recurrence overflowed at index " + std::to_string(i) +
                                " (q = " + std::to_string(q) + "); use the log route");
        seq.values.push_back(next);
    }
    return seq;
}

double u_value(double q, std::uint32_t i) {
    require_q_above_4(q, "u_value");
    if (i == 0) return 1.0;
    double prev = 1.0, cur = q - 1.0;
    for (std::uint32_t t = 2; t <= i; ++t) {
        const double next = (q - 2.0) * cur - prev;
        if (!std::isfinite(next))
            throw OverflowError("u_value overflowed at index " + std::to_string(t) +
                                " (q = " + std::to_string(q) + "); use the log route");
        prev = cur;
        cur = next;
    }
    return cur;
}

double u_closed_form(double q, std::uint32_t i) {
    const double s = sigma(q).sigma;
    const double denom = std::sqrt(q * (q - 4.0)); // = s - 1/s
    const double up1 = std::pow(s, double(i) + 1.0);
    const double up0 = std::pow(s, double(i));
    const double value = (up1 - 1.0 / up1 + up0 - 1.0 / up0) / denom;
    if (!std::isfinite(value))
        throw OverflowError("u_closed_form overflowed at index " + std::to_string(i) +
                            " (q = " + std::to_string(q) + "); use the log route");
    return value;
}

double log_u(double q, std::uint32_t i) {
    // U_i = s^{i+1} (1 + 1/s)(1 - s^{-(2i+1)}) / (s - 1/s), taken termwise in
    // logs; every factor is safe: 1/s < 1 and s^{-(2i+1)} < 1 throughout q > 4.
    // 1 - s^{-m} goes through expm1 so it keeps full relative precision when
    // s is barely above 1 (q near 4).
    const double ls = log_sigma(q);
    const double inv_s = 1.0 / sigma(q).sigma;
    const double one_minus_tail = -std::expm1(-(2.0 * double(i) + 1.0) * ls);
    return (double(i) + 1.0) * ls + std::log1p(inv_s) + std::log(one_minus_tail) -
           0.5 * std::log(q * (q - 4.0));
}

USandwich u_sandwich(double q, std::uint32_t j) {
    require_q_above_4(q, "u_sandwich");
    if (j < 2)
        throw std::invalid_argument("u_sandwich requires j >= 2, got j = " +
                                    std::to_string(j));
    USandwich s;
    s.lower = (q - 1.0) * std::pow(q - 2.0 - 1.0 / (q - 3.0), double(j) - 2.0);
    s.upper = (q - 1.0) * std::pow(q - 2.0 - 1.0 / q, double(j) - 2.0);
    if (!std::isfinite(s.lower) || !std::isfinite(s.upper))
        throw OverflowError("u_sandwich overflowed at j = " + std::to_string(j) +
                            " (q = " + std::to_string(q) + ")");
    return s;
}

double gamma_upper_bound(const Graph& g, const PerronResult& pr,
                         const RatioReport& rep, std::uint32_t j) {
    require_q_above_4(pr.q1, "gamma_upper_bound");
    if (pr.x_max1.size() != g.order())
        throw std::invalid_argument("gamma_upper_bound: eigenvector/graph size mismatch");
    if (j < 1 || j > rep.path.size())
        throw std::invalid_argument("gamma_upper_bound: j = " + std::to_string(j) +
                                    " outside [1, " + std::to_string(rep.path.size()) +
                                    "]");
    const double xj = pr.x_max1[rep.path[j - 1]];
    return u_value(pr.q1, j - 1) / xj;
}

double kite_gamma(std::uint32_t n, std::uint32_t k, Scale scale) {
    KiteParams params{n, k};
    params.validate();
    if (k == 1) // complete graph: regular, ratio exactly 1
        return scale == Scale::log ? 0.0 : 1.0;
    if (params.clique_size() < 3)
        throw DomainError("kite_gamma scalar route needs clique size >= 3 "
                          "(k = n-1 is the path, whose spectral radius is below 4)");
    const PerronResult pr = perron(build_kite(params));
    if (!pr.converged)
        throw NoConvergenceError("kite eigensolve did not converge (n = " +
                                 std::to_string(n) + ", k = " + std::to_string(k) + ")");
    return scale == Scale::log ? log_u(pr.q1, k - 1) : u_closed_form(pr.q1, k - 1);
}

BestKite best_kite_k(std::uint32_t n) {
    if (n < 4)
        throw std::invalid_argument("best_kite_k requires n >= 4, got " +
                                    std::to_string(n));
    BestKite best;
    for (std::uint32_t k = 2; k + 2 <= n; ++k) {
        const double lg = kite_gamma(n, k, Scale::log);
        if (best.k == 0 || lg > best.log_gamma) {
            best.k = k;
            best.log_gamma = lg;
        }
    }
    return best;
}

} // namespace qratio

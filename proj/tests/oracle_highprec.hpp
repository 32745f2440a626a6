// 200-bit reference evaluations of the scalar machinery, used only by the
// tests to pin the double-precision implementations. Deliberately written
// against a different substrate (MPFR) so the two routes share no code.
#pragma once

#include <cstdint>
#include <utility>

namespace oracle {

double sigma(double q);
double sigma_minus_one(double q);
double log_sigma(double q);
double u(double q, std::uint32_t i);
double log_u(double q, std::uint32_t i);
std::pair<double, double> sandwich(double q, std::uint32_t j);

} // namespace oracle

#pragma once

#include <stdexcept>

namespace qratio {

// Operation needs a connected graph (or an edge removal disconnected one).
class NotConnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scalar machinery evaluated outside its domain (e.g. growth factor at q <= 4).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A linear-scale value exceeded double range; callers should switch to the
// log-scale route.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph6 input (bad characters, wrong length, nonzero padding, ...).
class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensolve hit its iteration cap before meeting tolerance. perron() itself
// reports this through its result struct; this is thrown by callers that
// cannot return diagnostics.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qratio

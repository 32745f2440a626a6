// Command-line front end. run() parses argv, executes one subcommand, and
// writes results to `out` (diagnostics to `err`).
//
// Exit codes: 0 success; 2 malformed input or invalid parameters;
// 3 disconnected input; 4 linear-scale overflow; 5 universal checks found
// violations; 1 any other failure.
#pragma once

#include <iosfwd>

namespace qratio::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qratio::cli

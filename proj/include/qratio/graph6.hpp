// graph6 codec: the compact ASCII encoding for undirected simple graphs used
// by nauty/geng and most graph databases. Upper-triangle adjacency bits in
// column-major order, packed big-endian into 6-bit groups offset by 63.
#pragma once

#include <string>
#include <string_view>

#include "qratio/graph.hpp"

namespace qratio {

// Minimal-length encoding: one header byte for n <= 62, '~' + 3 bytes for
// larger orders (n <= 65536 supported).
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects bad characters, non-minimal order encodings, length
// mismatches, and nonzero padding bits. Throws Graph6Error.
Graph decode_graph6(std::string_view s);

} // namespace qratio

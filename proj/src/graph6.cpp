#include "qratio/graph6.hpp"

#include <cstdint>
#include <string>

#include "qratio/errors.hpp"

namespace qratio {

namespace {

constexpr int kBias = 63; // printable offset: data bytes are 63..126

std::uint64_t triangle_bits(std::uint64_t n) { return n * (n - 1) / 2; }

} // namespace

std::string encode_graph6(const Graph& g) {
    const std::uint32_t n = g.order();
    std::string out;
    out.reserve(4 + (triangle_bits(n) + 5) / 6);
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        // 18-bit order field; Graph::max_order keeps us below its 258047 cap.
        out.push_back('~');
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }
    unsigned acc = 0;
    int nbits = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
            acc = (acc << 1) | unsigned(g.has_edge(i, j));
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(std::string_view s) {
    if (s.empty()) throw Graph6Error("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw Graph6Error("graph6 byte out of range 63..126: code " +
                              std::to_string(int(static_cast<unsigned char>(c))));

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (s[0] != '~') {
        n = std::uint64_t(s[0]) - kBias;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw Graph6Error("truncated graph6 order field");
        n = (std::uint64_t(s[1] - kBias) << 12) | (std::uint64_t(s[2] - kBias) << 6) |
            std::uint64_t(s[3] - kBias);
        pos = 4;
        if (n <= 62)
            throw Graph6Error("non-minimal graph6 order encoding (long form for n = " +
                              std::to_string(n) + ")");
    } else {
        if (s.size() < 8) throw Graph6Error("truncated graph6 order field");
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | std::uint64_t(s[i] - kBias);
        pos = 8;
        if (n <= 258047)
            throw Graph6Error("non-minimal graph6 order encoding (huge form for n = " +
                              std::to_string(n) + ")");
    }
    if (n < 1) throw Graph6Error("graph6 order must be at least 1");
    if (n > Graph::max_order)
        throw Graph6Error("graph6 order " + std::to_string(n) +
                          " exceeds supported maximum " + std::to_string(Graph::max_order));

    const std::uint64_t nbits = triangle_bits(n);
    const std::size_t expected = pos + (nbits + 5) / 6;
    if (s.size() != expected)
        throw Graph6Error("graph6 length mismatch: got " + std::to_string(s.size()) +
                          " bytes, expected " + std::to_string(expected) + " for n = " +
                          std::to_string(n));

    Graph::Builder b(static_cast<std::uint32_t>(n));
    std::uint32_t i = 0, j = 1;
    std::uint64_t bit_index = 0;
    for (std::size_t p = pos; p < s.size(); ++p) {
        const unsigned group = unsigned(s[p]) - kBias;
        for (int shift = 5; shift >= 0; --shift, ++bit_index) {
            const bool bit = (group >> shift) & 1u;
            if (bit_index < nbits) {
                if (bit) b.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit) {
                throw Graph6Error("nonzero padding bits in graph6 string");
            }
        }
    }
    return std::move(b).build();
}

} // namespace qratio

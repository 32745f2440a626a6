// Exhaustive labeled enumeration of small connected graphs (edge-subset
// indices with a union-find connectivity filter), graph6 stream ingestion,
// and brute-force canonical forms for isomorphism-class bookkeeping.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qratio/graph.hpp"

namespace qratio {

// Native enumeration walks all 2^C(n,2) edge subsets; 7 is where that stops
// being a desk-scale job (2^21 subsets), and is all the exhaustive claims need.
inline constexpr std::uint32_t kMaxNativeOrder = 7;

// Brute-force canonicalization tries all n! relabelings.
inline constexpr std::uint32_t kMaxCanonicalOrder = 10;

std::uint64_t edge_slots(std::uint32_t n);          // C(n,2)
std::uint64_t labeled_graph_count(std::uint32_t n); // 2^C(n,2), n <= kMaxNativeOrder

// Half-open index range of one enumeration shard. A run's chunks partition
// [0, labeled_graph_count(n)) exactly once, so per-chunk results can be
// merged without double counting.
struct EnumerationChunk {
    std::uint32_t n = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

std::vector<EnumerationChunk> make_chunks(std::uint32_t n, std::uint64_t parts);

namespace detail {

struct NativeEdges {
    std::array<std::uint8_t, 21> eu{};
    std::array<std::uint8_t, 21> ev{};
    std::array<std::uint32_t, 7> incident{}; // edge-slot mask touching vertex v
    std::uint32_t count = 0;
};

// Edge slot p enumerates pairs (i, j), i < j, in lexicographic order; the
// subset index's bit p says whether that edge is present.
inline NativeEdges native_edge_table(std::uint32_t n) {
    NativeEdges t;
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = i + 1; j < n; ++j) {
            t.eu[t.count] = i;
            t.ev[t.count] = j;
            t.incident[i] |= 1u << t.count;
            t.incident[j] |= 1u << t.count;
            ++t.count;
        }
    return t;
}

inline bool mask_connected(std::uint32_t n, std::uint32_t mask, const NativeEdges& t) {
    std::array<std::uint8_t, 7> parent;
    for (std::uint32_t v = 0; v < n; ++v) parent[v] = std::uint8_t(v);
    auto find = [&](std::uint8_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::uint32_t components = n;
    while (mask != 0) {
        const std::uint32_t p = std::countr_zero(mask);
        mask &= mask - 1;
        const std::uint8_t a = find(t.eu[p]);
        const std::uint8_t b = find(t.ev[p]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

} // namespace detail

// Calls f(g, index) for every connected labeled graph on n vertices whose
// edge-subset index lies in [begin, end), in increasing index order.
template <class F>
void for_each_connected(std::uint32_t n, std::uint64_t begin, std::uint64_t end,
                        F&& f) {
    if (n < 2 || n > kMaxNativeOrder)
        throw std::invalid_argument("native enumeration supports n in [2, " +
                                    std::to_string(kMaxNativeOrder) + "], got " +
                                    std::to_string(n));
    const std::uint64_t total = labeled_graph_count(n);
    if (begin > end || end > total)
        throw std::invalid_argument("enumeration range [" + std::to_string(begin) +
                                    ", " + std::to_string(end) +
                                    ") outside [0, " + std::to_string(total) + ")");
    const detail::NativeEdges t = detail::native_edge_table(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (std::uint32_t(std::popcount(idx)) + 1 < n) continue; // < n-1 edges
        const std::uint32_t mask = std::uint32_t(idx);
        bool isolated = false;
        for (std::uint32_t v = 0; v < n; ++v)
            if ((mask & t.incident[v]) == 0) {
                isolated = true;
                break;
            }
        if (isolated) continue;
        if (!detail::mask_connected(n, mask, t)) continue;
        Graph::Builder b(n);
        std::uint32_t m = mask;
        while (m != 0) {
            const std::uint32_t p = std::countr_zero(m);
            m &= m - 1;
            b.add_edge(t.eu[p], t.ev[p]);
        }
        f(std::move(b).build(), idx);
    }
}

template <class F>
void for_each_connected(std::uint32_t n, F&& f) {
    for_each_connected(n, 0, labeled_graph_count(n), std::forward<F>(f));
}

struct IngestOptions {
    bool strict = true; // strict: malformed lines throw; lenient: skip and count
};

struct IngestRecord {
    Graph graph;
    std::size_t line_no = 0; // 1-based line in the stream
    bool connected = false;
};

struct IngestStats {
    std::size_t lines = 0;          // non-blank payload lines seen
    std::size_t graphs = 0;         // successfully decoded
    std::size_t connected = 0;
    std::size_t skipped_errors = 0; // lenient mode only
};

// Reads a graph6 stream (one graph per line; blank lines and the standard
// ">>graph6<<" header are tolerated) and hands each decoded graph to sink
// along with its line number and connectivity. Decoding errors carry the
// line number; connectivity filtering is left to the caller.
IngestStats ingest_graph6(std::istream& in,
                          const std::function<void(const IngestRecord&)>& sink,
                          const IngestOptions& opt = {});

// Relabels g by perm (old label v becomes perm[v]); perm must be a
// permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const std::uint32_t> perm);

// Lexicographically least graph6 encoding over all n! relabelings — a true
// isomorphism-class invariant, by brute force (hence the n <= 10 cap).
std::string canonical_form(const Graph& g);

} // namespace qratio

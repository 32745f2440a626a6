#include "qratio/enumeration.hpp"

#include <algorithm>
#include <cctype>

#include "qratio/errors.hpp"
#include "qratio/graph6.hpp"

namespace qratio {

std::uint64_t edge_slots(std::uint32_t n) {
    return std::uint64_t(n) * (n - 1) / 2;
}

std::uint64_t labeled_graph_count(std::uint32_t n) {
    if (n < 1 || n > kMaxNativeOrder)
        throw std::invalid_argument("labeled_graph_count supports n in [1, " +
                                    std::to_string(kMaxNativeOrder) + "], got " +
                                    std::to_string(n));
    return std::uint64_t(1) << edge_slots(n);
}

std::vector<EnumerationChunk> make_chunks(std::uint32_t n, std::uint64_t parts) {
    const std::uint64_t total = labeled_graph_count(n);
    if (parts < 1) throw std::invalid_argument("make_chunks needs parts >= 1");
    parts = std::min(parts, total);
    std::vector<EnumerationChunk> chunks;
    chunks.reserve(parts);
    for (std::uint64_t i = 0; i < parts; ++i)
        chunks.push_back(EnumerationChunk{n, total * i / parts, total * (i + 1) / parts});
    return chunks;
}

IngestStats ingest_graph6(std::istream& in,
                          const std::function<void(const IngestRecord&)>& sink,
                          const IngestOptions& opt) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    IngestStats stats;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Trim whitespace (covers trailing \r from CRLF files).
        std::size_t first = 0, last = line.size();
        while (first < last && std::isspace(static_cast<unsigned char>(line[first])))
            ++first;
        while (last > first && std::isspace(static_cast<unsigned char>(line[last - 1])))
            --last;
        std::string_view payload(line.data() + first, last - first);
        if (payload.substr(0, kHeader.size()) == kHeader)
            payload.remove_prefix(kHeader.size());
        if (payload.empty()) continue;
        ++stats.lines;
        try {
            IngestRecord rec{decode_graph6(payload), line_no, false};
            rec.connected = is_connected(rec.graph);
            ++stats.graphs;
            stats.connected += rec.connected;
            sink(rec);
        } catch (const Graph6Error& e) {
            if (opt.strict)
                throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
            ++stats.skipped_errors;
        }
    }
    return stats;
}

Graph relabel(const Graph& g, std::span<const std::uint32_t> perm) {
    const std::uint32_t n = g.order();
    if (perm.size() != n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::uint8_t> seen(n, 0);
    for (std::uint32_t v : perm) {
        if (v >= n || seen[v])
            throw std::invalid_argument("relabel: not a permutation of 0..n-1");
        seen[v] = 1;
    }
    Graph::Builder b(n);
    for (std::uint32_t u = 0; u < n; ++u)
        g.for_each_neighbor(u, [&](std::uint32_t v) {
            if (u < v) b.add_edge(perm[u], perm[v]);
        });
    return std::move(b).build();
}

std::string canonical_form(const Graph& g) {
    const std::uint32_t n = g.order();
    if (n > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical_form is brute force and capped at n = " +
                                    std::to_string(kMaxCanonicalOrder) + ", got " +
                                    std::to_string(n));
    // C(10,2) = 45 upper-triangle bits fit one word, packed most significant
    // first so integer order coincides with graph6 string order.
    const std::uint32_t nbits = std::uint32_t(edge_slots(n));
    std::array<std::uint32_t, kMaxCanonicalOrder> perm{};
    for (std::uint32_t v = 0; v < n; ++v) perm[v] = v;
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t key = 0;
        for (std::uint32_t j = 1; j < n; ++j)
            for (std::uint32_t i = 0; i < j; ++i)
                key = (key << 1) | std::uint64_t(g.has_edge(perm[i], perm[j]));
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    // Pack the winning bit string as graph6 (n <= 10 always short form).
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    for (std::uint32_t start = 0; start < nbits; start += 6) {
        unsigned group = 0;
        for (std::uint32_t b = start; b < start + 6; ++b) {
            group <<= 1;
            if (b < nbits) group |= unsigned((best >> (nbits - 1 - b)) & 1);
        }
        out.push_back(static_cast<char>(63 + group));
    }
    return out;
}

} // namespace qratio

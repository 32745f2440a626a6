// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency
// rows, plus the named-family and kite builders and the BFS utilities the
// rest of the library is built on.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qratio {

class Graph {
public:
    static constexpr std::uint32_t max_order = 1u << 16;

    // Accumulates edges, then freezes them into an immutable Graph.
    class Builder {
    public:
        explicit Builder(std::uint32_t n);
        // Rejects loops and out-of-range endpoints; adding an edge twice is a no-op.
        Builder& add_edge(std::uint32_t u, std::uint32_t v);
        Graph build() &&;

    private:
        std::uint32_t n_ = 0;
        std::uint32_t words_ = 0;
        std::vector<std::uint64_t> bits_;
    };

    Graph() = default; // order-0 shell, produced only by moves

    std::uint32_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::uint32_t degree(std::uint32_t v) const { return degrees_[v]; }
    std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }

    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    // Adjacency row of v as packed 64-bit words, length row_words().
    const std::uint64_t* row(std::uint32_t v) const {
        return bits_.data() + std::size_t(v) * words_;
    }
    std::uint32_t row_words() const noexcept { return words_; }

    // Calls visit(u) for every neighbor u of v, in increasing order of u.
    template <class F>
    void for_each_neighbor(std::uint32_t v, F&& visit) const {
        const std::uint64_t* r = row(v);
        for (std::uint32_t w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits != 0) {
                visit(w * 64 + static_cast<std::uint32_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint32_t> neighbors(std::uint32_t v) const;

    // Structural equality under the same labeling.
    bool operator==(const Graph&) const = default;

private:
    std::uint32_t n_ = 0;
    std::uint32_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> degrees_;
};

enum class Family { path, cycle, complete, star };

// Accepts "path", "cycle", "complete", "star"; throws std::invalid_argument.
Family family_from_string(std::string_view name);

// P_n, C_n (n >= 3), K_n, or the star K_{1,n-1}.
Graph build_named(Family family, std::uint32_t n);

// A path on k vertices with one end identified with a vertex of a clique on
// n-k+1 vertices. Vertices 0..k-1 are the path (0 is the pendant end), vertex
// k-1 is the attachment point, and k-1..n-1 form the clique.
struct KiteParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;

    std::uint32_t clique_size() const { return n - k + 1; }
    std::size_t edge_count() const;
    void validate() const; // throws std::invalid_argument
};

Graph build_kite(KiteParams p);
Graph build_kite(std::uint32_t n, std::uint32_t k);

bool is_connected(const Graph& g);

// Shortest path between two vertices as a vertex list (inclusive). BFS with
// neighbors expanded in increasing index, so ties always resolve to the
// lexicographically least predecessor chain. Throws NotConnectedError if the
// endpoints are in different components.
std::vector<std::uint32_t> shortest_path(const Graph& g, std::uint32_t from,
                                         std::uint32_t to);

// Longest prefix of `path` that forms a pendant path hanging off the rest of
// the graph: path[0] must have degree 1 and interior prefix vertices degree 2.
// Returns 0 when path[0] is not pendant. `path` must be a path in g (distinct,
// consecutively adjacent vertices); throws std::invalid_argument otherwise.
std::uint32_t pendant_prefix_length(const Graph& g,
                                    std::span<const std::uint32_t> path);

} // namespace qratio

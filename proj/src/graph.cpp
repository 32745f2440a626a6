#include "qratio/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qratio/errors.hpp"

namespace qratio {

Graph::Builder::Builder(std::uint32_t n) {
    if (n < 1 || n > Graph::max_order)
        throw std::invalid_argument("graph order must be in [1, " +
                                    std::to_string(Graph::max_order) + "], got " +
                                    std::to_string(n));
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(std::size_t(n_) * words_, 0);
}

Graph::Builder& Graph::Builder::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range: (" +
                                    std::to_string(u) + ", " + std::to_string(v) +
                                    ") with n = " + std::to_string(n_));
    if (u == v)
        throw std::invalid_argument("loops are not allowed (vertex " +
                                    std::to_string(u) + ")");
    bits_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    bits_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    return *this;
}

Graph Graph::Builder::build() && {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = std::move(bits_);
    g.degrees_.resize(n_);
    std::size_t total = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
        std::uint32_t d = 0;
        const std::uint64_t* r = g.bits_.data() + std::size_t(v) * words_;
        for (std::uint32_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
        g.degrees_[v] = d;
        total += d;
    }
    g.edges_ = total / 2;
    return g;
}

std::vector<std::uint32_t> Graph::neighbors(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](std::uint32_t u) { out.push_back(u); });
    return out;
}

Family family_from_string(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    throw std::invalid_argument("unknown graph family: '" + std::string(name) +
                                "' (expected path, cycle, complete, or star)");
}

Graph build_named(Family family, std::uint32_t n) {
    switch (family) {
        case Family::path: {
            Graph::Builder b(n);
            for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
            return std::move(b).build();
        }
        case Family::cycle: {
            if (n < 3)
                throw std::invalid_argument("cycle requires n >= 3, got " +
                                            std::to_string(n));
            Graph::Builder b(n);
            for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
            b.add_edge(n - 1, 0);
            return std::move(b).build();
        }
        case Family::complete: {
            Graph::Builder b(n);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) b.add_edge(i, j);
            return std::move(b).build();
        }
        case Family::star: {
            Graph::Builder b(n);
            for (std::uint32_t i = 1; i < n; ++i) b.add_edge(0, i);
            return std::move(b).build();
        }
    }
    throw std::invalid_argument("unknown graph family enum value");
}

std::size_t KiteParams::edge_count() const {
    std::size_t s = clique_size();
    return (k - 1) + s * (s - 1) / 2;
}

void KiteParams::validate() const {
    if (n < 2 || n > Graph::max_order)
        throw std::invalid_argument("kite order must be in [2, " +
                                    std::to_string(Graph::max_order) + "], got " +
                                    std::to_string(n));
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("kite path length k must be in [1, n-1], got k = " +
                                    std::to_string(k) + " with n = " + std::to_string(n));
}

Graph build_kite(KiteParams p) {
    p.validate();
    Graph::Builder b(p.n);
    for (std::uint32_t i = 0; i + 1 < p.k; ++i) b.add_edge(i, i + 1);
    for (std::uint32_t i = p.k - 1; i < p.n; ++i)
        for (std::uint32_t j = i + 1; j < p.n; ++j) b.add_edge(i, j);
    Graph g = std::move(b).build();
    if (g.edge_count() != p.edge_count())
        throw std::logic_error("kite construction produced wrong edge count");
    return g;
}

Graph build_kite(std::uint32_t n, std::uint32_t k) {
    return build_kite(KiteParams{n, k});
}

bool is_connected(const Graph& g) {
    const std::uint32_t n = g.order();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> stack;
    stack.reserve(n);
    stack.push_back(0);
    seen[0] = 1;
    std::uint32_t count = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](std::uint32_t u) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        });
    }
    return count == n;
}

std::vector<std::uint32_t> shortest_path(const Graph& g, std::uint32_t from,
                                         std::uint32_t to) {
    const std::uint32_t n = g.order();
    if (from >= n || to >= n)
        throw std::invalid_argument("shortest_path endpoint out of range");
    // BFS; the FIFO order plus ascending neighbor iteration makes the parent
    // of each vertex the lowest-index vertex at the previous level, so the
    // reconstructed path is deterministic.
    std::vector<std::uint32_t> parent(n, Graph::max_order);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    queue.push_back(from);
    parent[from] = from;
    bool found = (from == to);
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const std::uint32_t v = queue[head];
        g.for_each_neighbor(v, [&](std::uint32_t u) {
            if (!found && parent[u] == Graph::max_order) {
                parent[u] = v;
                if (u == to) {
                    found = true;
                    return;
                }
                queue.push_back(u);
            }
        });
    }
    if (!found)
        throw NotConnectedError("no path between vertices " + std::to_string(from) +
                                " and " + std::to_string(to));
    std::vector<std::uint32_t> path;
    for (std::uint32_t v = to;; v = parent[v]) {
        path.push_back(v);
        if (v == from) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::uint32_t pendant_prefix_length(const Graph& g,
                                    std::span<const std::uint32_t> path) {
    const std::uint32_t n = g.order();
    if (path.empty()) throw std::invalid_argument("pendant_prefix_length: empty path");
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= n)
            throw std::invalid_argument("pendant_prefix_length: vertex out of range");
        if (seen[path[i]])
            throw std::invalid_argument("pendant_prefix_length: repeated vertex");
        seen[path[i]] = 1;
        if (i > 0 && !g.has_edge(path[i - 1], path[i]))
            throw std::invalid_argument("pendant_prefix_length: not a path in the graph");
    }
    if (g.degree(path[0]) != 1) return 0;
    // The prefix may extend one vertex past the run of degree-2 interior
    // vertices: the last prefix vertex is where the rest of the graph attaches.
    std::size_t boundary = path.size();
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (g.degree(path[i]) != 2) {
            boundary = i;
            break;
        }
    }
    return static_cast<std::uint32_t>(std::min(path.size(), boundary + 1));
}

} // namespace qratio

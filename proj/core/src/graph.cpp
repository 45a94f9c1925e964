#include "triquad/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace triquad {

namespace {

void check_rows(int n, std::span<const std::uint64_t> rows) {
    if (n < 0 || n > Graph::max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " outside [0, 64]");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " adjacency rows, got " +
                                    std::to_string(rows.size()));
    const std::uint64_t live =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~live)
            throw std::invalid_argument("adjacency bits set beyond vertex " +
                                        std::to_string(n - 1));
        if (rows[u] >> u & 1)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        for (int v = u + 1; v < n; ++v)
            if ((rows[u] >> v & 1) != (rows[v] >> u & 1))
                throw std::invalid_argument("asymmetric adjacency between " +
                                            std::to_string(u) + " and " +
                                            std::to_string(v));
    }
}

}  // namespace

VertexPair ordered_pair(int a, int b) {
    assert(a != b);
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

Graph::Graph(int n, std::vector<std::uint64_t> adj)
    : n_(n), adj_(std::move(adj)) {
    assert(static_cast<int>(adj_.size()) == n_);
#ifndef NDEBUG
    // symmetry, loop-freeness, and clear high bits hold for every
    // constructed value, however it was produced
    const std::uint64_t live =
        n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (int u = 0; u < n_; ++u) {
        assert((adj_[static_cast<std::size_t>(u)] & ~live) == 0);
        assert((adj_[static_cast<std::size_t>(u)] >> u & 1) == 0);
        for (int v = u + 1; v < n_; ++v)
            assert((adj_[static_cast<std::size_t>(u)] >> v & 1) ==
                   (adj_[static_cast<std::size_t>(v)] >> u & 1));
    }
#endif
}

Graph Graph::build(int n, std::span<const VertexPair> edge_list) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " outside [0, 64]");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const VertexPair& e : edge_list) {
        if (e.u == e.v)
            throw std::invalid_argument("edge with equal endpoints " +
                                        std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) +
                                        "} out of range for n=" +
                                        std::to_string(n));
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return Graph(n, std::move(adj));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    check_rows(n, rows);
    return Graph(n, std::vector<std::uint64_t>(rows.begin(), rows.end()));
}

bool Graph::has_edge(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return adj_[static_cast<std::size_t>(u)] >> v & 1;
}

std::uint64_t Graph::neighbor_bits(int v) const {
    assert(v >= 0 && v < n_);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    return std::popcount(neighbor_bits(v));
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (std::uint64_t row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

std::size_t Graph::pair_count() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

Graph Graph::complement() const {
    const std::uint64_t live =
        n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    std::vector<std::uint64_t> adj(adj_.size());
    for (int v = 0; v < n_; ++v)
        adj[static_cast<std::size_t>(v)] =
            ~adj_[static_cast<std::size_t>(v)] & live & ~(std::uint64_t{1} << v);
    return Graph(n_, std::move(adj));
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.push_back({u, v});
    return out;
}

std::vector<VertexPair> Graph::non_edges() const {
    std::vector<VertexPair> out;
    out.reserve(pair_count() - edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.push_back({u, v});
    return out;
}

Graph Graph::induced_prefix(int k) const {
    assert(k >= 0 && k <= n_);
    const std::uint64_t live =
        k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) adj[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & live;
    return Graph(k, std::move(adj));
}

Graph Graph::permuted(std::span<const int> perm) const {
    assert(static_cast<int>(perm.size()) == n_);
    std::vector<std::uint64_t> adj(adj_.size(), 0);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = adj_[static_cast<std::size_t>(u)];
        while (row) {
            const int v = std::countr_zero(row);
            row &= row - 1;
            adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |=
                std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
        }
    }
    return Graph(n_, std::move(adj));
}

}  // namespace triquad

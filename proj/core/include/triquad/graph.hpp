#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace triquad {

/// An unordered pair of distinct vertices, stored with u < v.
struct VertexPair {
    int u = 0;
    int v = 0;
    friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Normalizes (a, b) into a VertexPair with u < v. Requires a != b.
VertexPair ordered_pair(int a, int b);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Each adjacency row is a single 64-bit word, so n is capped at 64.
/// Values are cheap to copy and safe to share across threads; every
/// operation is const.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;  // the graph on zero vertices

    /// Builds a graph from an edge list. Duplicate edges are idempotent.
    /// Throws std::invalid_argument on n out of [0,64], a pair out of
    /// range, or a pair with u == v.
    static Graph build(int n, std::span<const VertexPair> edge_list);

    /// Builds directly from adjacency rows. Throws std::invalid_argument
    /// unless the rows are symmetric, loop-free, and clear above bit n-1.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int vertex_count() const noexcept { return n_; }

    bool has_edge(int u, int v) const;

    /// Adjacency row of v as a bitset over vertex indices.
    std::uint64_t neighbor_bits(int v) const;

    int degree(int v) const;

    std::size_t edge_count() const noexcept;

    /// C(n,2), the number of unordered vertex pairs.
    std::size_t pair_count() const noexcept;

    /// The complement graph: {u,v} is an edge iff it is not one here.
    Graph complement() const;

    /// All edges in lexicographic (u, v) order.
    std::vector<VertexPair> edges() const;

    /// All non-edges in lexicographic (u, v) order.
    std::vector<VertexPair> non_edges() const;

    /// Induced subgraph on vertices 0..k-1.
    Graph induced_prefix(int k) const;

    /// Relabels vertices: result has edge {perm[u], perm[v]} iff this has {u,v}.
    /// perm must be a permutation of 0..n-1.
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, std::vector<std::uint64_t> adj);

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

}  // namespace triquad

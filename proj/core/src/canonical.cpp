#include "triquad/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "triquad/graph6.hpp"

namespace triquad {

namespace {

// The upper-triangle bit string of an n-vertex graph has C(n,2) <= 45
// positions for n <= 10, so a whole candidate labeling packs into one
// 64-bit key with position 0 as the most significant bit. Comparing keys
// is then exactly lexicographic comparison of the bit strings.
struct CanonSearch {
    const Graph& g;
    int n;
    int m;  // C(n,2)
    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, canonical_max_vertices> slot_vertex{};
    std::uint64_t used = 0;
    std::array<int, canonical_max_vertices> try_order{};
    // twin_of[v]: vertices u with N(u)\{v} == N(v)\{u}; swapping such a
    // pair is an automorphism, so only one of them needs expanding per slot
    std::array<std::uint64_t, canonical_max_vertices> twin_of{};

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), m(n * (n - 1) / 2) {
        std::array<int, canonical_max_vertices> deg{};
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
        std::iota(try_order.begin(), try_order.begin() + n, 0);
        std::sort(try_order.begin(), try_order.begin() + n, [&](int a, int b) {
            const int da = deg[static_cast<std::size_t>(a)];
            const int db = deg[static_cast<std::size_t>(b)];
            return da != db ? da < db : a < b;
        });
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (u != v &&
                    (g.neighbor_bits(u) & ~(std::uint64_t{1} << v)) ==
                        (g.neighbor_bits(v) & ~(std::uint64_t{1} << u)))
                    twin_of[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        // seed the bound with one full labeling (ascending degree)
        best = key_of(std::span<const int>(try_order.data(), static_cast<std::size_t>(n)));
    }

    std::uint64_t key_of(std::span<const int> slots) const {
        std::uint64_t key = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                key = key << 1 |
                      (g.neighbor_bits(slots[static_cast<std::size_t>(j)]) >>
                           slots[static_cast<std::size_t>(i)] &
                       1);
        return key;
    }

    void descend(int slot, std::uint64_t acc) {
        if (slot == n) {
            best = std::min(best, acc);
            return;
        }
        std::uint64_t tried = 0;
        for (int idx = 0; idx < n; ++idx) {
            const int v = try_order[static_cast<std::size_t>(idx)];
            if (used >> v & 1) continue;
            if (twin_of[static_cast<std::size_t>(v)] & tried) continue;
            tried |= std::uint64_t{1} << v;

            std::uint64_t column = 0;
            const std::uint64_t row = g.neighbor_bits(v);
            for (int i = 0; i < slot; ++i)
                column = column << 1 |
                         (row >> slot_vertex[static_cast<std::size_t>(i)] & 1);
            const std::uint64_t prefix = acc << slot | column;
            const int bits = slot * (slot + 1) / 2;
            if (prefix > best >> (m - bits)) continue;  // branch cannot win

            slot_vertex[static_cast<std::size_t>(slot)] = v;
            used |= std::uint64_t{1} << v;
            descend(slot + 1, prefix);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

Graph graph_from_key(int n, std::uint64_t key) {
    const int m = n * (n - 1) / 2;
    std::vector<VertexPair> edges;
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (key >> (m - 1 - p) & 1) edges.push_back({i, j});
    return Graph::build(n, edges);
}

}  // namespace

CanonicalGraph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > canonical_max_vertices)
        throw std::invalid_argument("canonical_form caps at n <= " +
                                    std::to_string(canonical_max_vertices) +
                                    ", got " + std::to_string(n));
    if (n <= 1) return {g, to_graph6(g)};

    CanonSearch search(g);
    search.descend(0, 0);
    Graph canon = graph_from_key(n, search.best);
    std::string g6 = to_graph6(canon);
    return {std::move(canon), std::move(g6)};
}

}  // namespace triquad

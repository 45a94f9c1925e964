#include "triquad/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "triquad/canonical.hpp"
#include "triquad/graph6.hpp"

namespace triquad::oracle {

int naive_triangles_through(const Graph& g, VertexPair p) {
    assert(g.vertex_count() <= 12);
    int count = 0;
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (z == p.u || z == p.v) continue;
        if (g.has_edge(p.u, z) && g.has_edge(p.v, z)) ++count;
    }
    return count;
}

int naive_c4_through(const Graph& g, VertexPair p) {
    assert(g.vertex_count() <= 12);
    int count = 0;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == p.u || w == p.v) continue;
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (x == p.u || x == p.v || x == w) continue;
            if (g.has_edge(p.v, w) && g.has_edge(w, x) && g.has_edge(x, p.u))
                ++count;
        }
    }
    return count;
}

bool naive_isomorphic(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count()) return false;
    assert(n <= 8);
    if (g.edge_count() != h.edge_count()) return false;

    const auto degrees_sorted = [](const Graph& x) {
        std::vector<int> d(static_cast<std::size_t>(x.vertex_count()), 0);
        for (int u = 0; u < x.vertex_count(); ++u)
            for (int v = 0; v < x.vertex_count(); ++v)
                if (u != v && x.has_edge(u, v)) ++d[static_cast<std::size_t>(u)];
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees_sorted(g) != degrees_sorted(h)) return false;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (g.has_edge(u, v) !=
                    h.has_edge(perm[static_cast<std::size_t>(u)],
                               perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t labeled_class_count(int n) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("labeled_class_count caps at n <= 6, got " +
                                    std::to_string(n));
    const int m = n * (n - 1) / 2;
    std::unordered_set<std::string> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<VertexPair> edges;
        int p = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++p)
                if (mask >> p & 1) edges.push_back({i, j});
        classes.insert(canonical_form(Graph::build(n, edges)).canon_g6);
    }
    return classes.size();
}

}  // namespace triquad::oracle

#include "triquad/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace triquad {

namespace {

// Parent on k-1 vertices plus a new vertex k-1 whose neighborhood is the
// given bitmask over the old vertices.
Graph attach_vertex(const Graph& parent, std::uint64_t neighborhood) {
    const int n = parent.vertex_count() + 1;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int v = 0; v + 1 < n; ++v) {
        rows[static_cast<std::size_t>(v)] = parent.neighbor_bits(v);
        if (neighborhood >> v & 1)
            rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (n - 1);
    }
    rows[static_cast<std::size_t>(n - 1)] = neighborhood;
    return Graph::from_rows(n, rows);
}

// Extends every parent by one vertex over all 2^(k-1) neighborhoods,
// canonicalizes, and deduplicates. Workers split the (parent, mask) grid;
// each keeps a private map and the per-level merge is a barrier, so the
// result is identical for any worker count.
std::vector<CanonicalGraph> next_level(const std::vector<CanonicalGraph>& parents,
                                       int child_n, int workers) {
    const std::uint64_t masks = std::uint64_t{1} << (child_n - 1);
    const std::uint64_t total = parents.size() * masks;
    const int used_workers = std::max(
        1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(
                                      total, 256))));

    std::vector<std::unordered_map<std::string, Graph>> found(
        static_cast<std::size_t>(used_workers));
    auto run = [&](int w) {
        auto& local = found[static_cast<std::size_t>(w)];
        const std::uint64_t begin = total * static_cast<std::uint64_t>(w) /
                                    static_cast<std::uint64_t>(used_workers);
        const std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) /
                                  static_cast<std::uint64_t>(used_workers);
        for (std::uint64_t item = begin; item < end; ++item) {
            const Graph& parent = parents[static_cast<std::size_t>(item / masks)].graph;
            CanonicalGraph canon = canonical_form(attach_vertex(parent, item % masks));
            local.emplace(std::move(canon.canon_g6), std::move(canon.graph));
        }
    };

    if (used_workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(used_workers));
        for (int w = 0; w < used_workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::map<std::string, Graph> merged;
    for (auto& local : found)
        for (auto& [g6, graph] : local) merged.emplace(g6, std::move(graph));

    std::vector<CanonicalGraph> level;
    level.reserve(merged.size());
    for (auto& [g6, graph] : merged) level.push_back({std::move(graph), g6});
    return level;
}

std::vector<CanonicalGraph> zero_level() {
    Graph k0;
    CanonicalGraph c = canonical_form(k0);
    return {std::move(c)};
}

}  // namespace

std::vector<CanonicalGraph> enumerate_all(int n, int workers,
                                          const ProgressFn& progress) {
    if (n < 0 || n > canonical_max_vertices)
        throw std::invalid_argument("enumerate_all requires 0 <= n <= " +
                                    std::to_string(canonical_max_vertices));
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    std::vector<CanonicalGraph> level = zero_level();
    for (int k = 1; k <= n; ++k) {
        level = next_level(level, k, workers);
        if (progress) progress(k, level.size());
    }
    return level;
}

bool prune_partial(const Graph& g, int completed) {
    if (completed < 0 || completed > g.vertex_count())
        throw std::invalid_argument("completed prefix size out of range");
    const Graph prefix =
        completed == g.vertex_count() ? g : g.induced_prefix(completed);

    // an edge in two triangles stays in two triangles; a 4-cycle stays a
    // 4-cycle; complement 4-cycles within the prefix survive extension
    // because new vertices never remove complement edges among old ones
    for (VertexPair e : prefix.edges())
        if (triangles_through(prefix, e) >= 2) return true;
    if (has_c4(prefix)) return true;
    const Graph comp = prefix.complement();
    for (VertexPair p : prefix.non_edges())
        if (c4_through(comp, p) >= 2) return true;
    return false;
}

std::vector<Certificate> search_p2p3(const SearchConfig& cfg,
                                     const ProgressFn& progress) {
    if (cfg.n_max < 1 || cfg.n_max > canonical_max_vertices)
        throw std::invalid_argument("n_max must be in [1, " +
                                    std::to_string(canonical_max_vertices) + "]");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");

    std::vector<Certificate> hits;
    std::vector<CanonicalGraph> level = zero_level();
    for (int k = 0; k <= cfg.n_max; ++k) {
        if (k > 0) {
            level = next_level(level, k, cfg.workers);
            if (progress) progress(k, level.size());
        }
        for (const CanonicalGraph& c : level) {
            PropertyReport p2 = check_p2(c.graph);
            PropertyReport p3 = check_p3(c.graph);
            if (!p2.holds || !p3.holds) continue;
            const bool trivial = p2.vacuous && p3.vacuous;
            if (trivial && cfg.nontrivial_only) continue;
            hits.push_back({c.canon_g6, k, std::move(p2), std::move(p3), trivial});
        }
        if (k < cfg.n_max && cfg.prune) {
            std::erase_if(level, [&](const CanonicalGraph& c) {
                return prune_partial(c.graph, k);
            });
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const Certificate& a, const Certificate& b) {
                  return a.canon_g6 < b.canon_g6;
              });
    return hits;
}

}  // namespace triquad

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "triquad/canonical.hpp"
#include "triquad/graph.hpp"
#include "triquad/local_checks.hpp"

namespace triquad {

/// Per-level progress callback: (vertex count, classes at that level).
using ProgressFn = std::function<void(int level, std::size_t class_count)>;

/// One representative per isomorphism class of simple graphs on exactly
/// n vertices, sorted by canon_g6. Built by vertex augmentation: the
/// classes on k-1 vertices are each extended by a new vertex with every
/// possible neighborhood, canonicalized, and deduplicated.
/// Throws std::invalid_argument for n outside [0, canonical_max_vertices].
std::vector<CanonicalGraph> enumerate_all(int n, int workers = 1,
                                          const ProgressFn& progress = {});

/// Evidence that one isomorphism class satisfies p2 and p3.
struct Certificate {
    std::string canon_g6;
    int n = 0;
    PropertyReport p2_report;
    PropertyReport p3_report;
    bool trivial = false;  // both reports vacuous (only n <= 1)
};

struct SearchConfig {
    int n_max = 8;               // hard cap canonical_max_vertices
    bool prune = true;
    int workers = 1;
    bool nontrivial_only = true;
};

/// Decides whether a partial graph, whose first `completed` vertices have
/// their final mutual adjacencies, can be discarded: true when within the
/// completed prefix some edge already lies in >= 2 triangles, some edge
/// lies in a 4-cycle, or some non-edge lies in >= 2 complement 4-cycles.
/// All three counts are monotone under appending vertices, so a pruned
/// prefix can never extend to a graph satisfying p2 and p3.
bool prune_partial(const Graph& g, int completed);

/// All isomorphism classes with 2 <= n <= cfg.n_max satisfying p2 and p3
/// (the 0- and 1-vertex vacuous hits are included, flagged trivial, when
/// nontrivial_only is false). Sorted by canon_g6. With prune=false every
/// class is visited; with prune=true prune_partial gates which classes
/// are extended, and the hit set is identical.
std::vector<Certificate> search_p2p3(const SearchConfig& cfg,
                                     const ProgressFn& progress = {});

}  // namespace triquad

#pragma once

#include <string>

#include "triquad/graph.hpp"

namespace triquad {

/// Canonicalization is a full permutation search; past ~10 vertices it is
/// the wrong tool, so the cap is enforced rather than suffered.
inline constexpr int canonical_max_vertices = 10;

struct CanonicalGraph {
    Graph graph;           // relabeled so its own bit string is minimal
    std::string canon_g6;  // graph6 of that labeling
};

/// The canonical labeling of g: the relabeling whose upper-triangle
/// adjacency bit string (graph6 bit order) is lexicographically minimal
/// over all n! vertex permutations. Two graphs are isomorphic iff their
/// canonical forms are equal. Throws std::invalid_argument for
/// n > canonical_max_vertices.
///
/// The search is branch-and-bound over slot assignments: a branch dies
/// when its partial bit string already exceeds the best-known prefix, and
/// twin vertices (N(u)\{v} == N(v)\{u}, a transposition automorphism) are
/// expanded only once per slot. Both prunings are exact, so the result
/// equals the unpruned minimum.
CanonicalGraph canonical_form(const Graph& g);

}  // namespace triquad

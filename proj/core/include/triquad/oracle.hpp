#pragma once

#include <cstddef>

#include "triquad/graph.hpp"

namespace triquad::oracle {

// Deliberately naive reference implementations for cross-validating the
// fast paths. These share no counting logic with them: adjacency is probed
// edge by edge, never via bitset intersection.

/// Counts z outside {u,v} with both {u,z} and {v,z} edges. n <= 12.
int naive_triangles_through(const Graph& g, VertexPair p);

/// Counts ordered pairs (w,x) of distinct vertices outside {u,v} with
/// v~w, w~x, x~u. n <= 12.
int naive_c4_through(const Graph& g, VertexPair p);

/// True iff some vertex bijection maps the edges of g exactly onto the
/// edges of h. Size mismatch is false, not an error. n <= 8.
bool naive_isomorphic(const Graph& g, const Graph& h);

/// Enumerates all 2^C(n,2) labeled graphs on n vertices and counts the
/// distinct canonical forms. n <= 6.
std::size_t labeled_class_count(int n);

}  // namespace triquad::oracle

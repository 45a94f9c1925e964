#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triquad/graph.hpp"

namespace triquad {

/// The four local uniqueness properties.
///
///   p2    - every edge of G lies in exactly one triangle of G
///   p3    - every non-edge of G lies in exactly one 4-cycle of complement(G)
///   p2bar - every edge has exactly one common neighbor
///   p3bar - every non-edge has exactly two common neighbors
///           (equivalently: a unique pair {z,w} joined to both endpoints)
enum class GraphProperty { p2, p3, p2bar, p3bar };

std::string_view property_name(GraphProperty p);

/// The count a satisfied pair must show: 1 for p2/p3/p2bar, 2 for p3bar.
int expected_count(GraphProperty p);

/// Number of triangles of g containing the pair as an edge, i.e.
/// |N(u) & N(v)|. Defined for any in-range pair.
int triangles_through(const Graph& g, VertexPair p);

/// Number of 4-cycle subgraphs of g containing p = {u,v} as an edge,
/// counted as #{(w,x) : w != x, {w,x} disjoint from {u,v},
/// v~w, w~x, x~u}. Chords are permitted; each 4-cycle is counted once
/// since w is the cycle-neighbor of v and x the cycle-neighbor of u.
int c4_through(const Graph& g, VertexPair p);

/// Per-pair counts in the graph where the pair is an edge.
struct EdgeLocalProfile {
    VertexPair pair;
    int triangle_count = 0;
    int c4_count = 0;
};

EdgeLocalProfile local_profile(const Graph& g, VertexPair p);

struct Violation {
    VertexPair pair;
    int observed = 0;
};

struct PropertyReport {
    GraphProperty property = GraphProperty::p2;
    bool holds = false;
    /// True when the quantification domain (edges or non-edges) is empty.
    bool vacuous = false;
    /// Every pair whose observed count differs from expected_count(property).
    std::vector<Violation> violations;
    /// Witness vertices for each satisfied pair, in pair order.
    std::vector<std::pair<VertexPair, std::vector<int>>> witnesses;
};

PropertyReport check_p2(const Graph& g);
PropertyReport check_p3(const Graph& g);
PropertyReport check_p2bar(const Graph& g);
PropertyReport check_p3bar(const Graph& g);

struct SrgParams {
    long long v = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;
};

enum class SrgStatus {
    strongly_regular,
    degenerate_empty,     // no edges: mu (or everything) undefined
    degenerate_complete,  // complete: lambda side fine but mu undefined
    not_regular,
    lambda_not_uniform,
    mu_not_uniform,
};

std::string_view srg_status_name(SrgStatus s);

struct SrgResult {
    SrgStatus status = SrgStatus::degenerate_empty;
    std::optional<SrgParams> params;  // set iff strongly_regular
    std::string reason;               // human-readable failure detail
};

/// Extracts (v,k,lambda,mu) when g is strongly regular; otherwise reports
/// why not. Empty and complete graphs (including n <= 1) are the distinct
/// degenerate outcomes, not errors.
SrgResult srg_params(const Graph& g);

/// Solves k(k-lambda-1) = (v-k-1)mu, i.e. k^2 + k(mu-lambda-1) - mu(v-1) = 0,
/// for a non-negative integer k. Returns nullopt when no integral root exists.
std::optional<long long> solve_srg_degree(long long v, long long lambda, long long mu);

/// True iff g contains at least one triangle.
bool has_triangle(const Graph& g);

/// True iff g contains at least one 4-cycle subgraph (equivalently, some
/// vertex pair has two or more common neighbors).
bool has_c4(const Graph& g);

}  // namespace triquad

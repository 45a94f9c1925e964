#include "triquad/local_checks.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace triquad {

namespace {

void check_pair(const Graph& g, VertexPair p) {
    if (p.u < 0 || p.v < 0 || p.u >= g.vertex_count() || p.v >= g.vertex_count() ||
        p.u == p.v)
        throw std::invalid_argument("vertex pair {" + std::to_string(p.u) + "," +
                                    std::to_string(p.v) + "} out of range for n=" +
                                    std::to_string(g.vertex_count()));
}

std::vector<int> bits_to_vertices(std::uint64_t bits) {
    std::vector<int> out;
    while (bits) {
        out.push_back(std::countr_zero(bits));
        bits &= bits - 1;
    }
    return out;
}

}  // namespace

std::string_view property_name(GraphProperty p) {
    switch (p) {
        case GraphProperty::p2: return "p2";
        case GraphProperty::p3: return "p3";
        case GraphProperty::p2bar: return "p2bar";
        case GraphProperty::p3bar: return "p3bar";
    }
    return "?";
}

int expected_count(GraphProperty p) {
    return p == GraphProperty::p3bar ? 2 : 1;
}

int triangles_through(const Graph& g, VertexPair p) {
    check_pair(g, p);
    return std::popcount(g.neighbor_bits(p.u) & g.neighbor_bits(p.v));
}

int c4_through(const Graph& g, VertexPair p) {
    check_pair(g, p);
    const std::uint64_t exclude =
        std::uint64_t{1} << p.u | std::uint64_t{1} << p.v;
    int count = 0;
    std::uint64_t ws = g.neighbor_bits(p.v) & ~exclude;
    while (ws) {
        const int w = std::countr_zero(ws);
        ws &= ws - 1;
        // x ranges over common neighbors of w and u, excluding u, v, w
        count += std::popcount(g.neighbor_bits(w) & g.neighbor_bits(p.u) &
                               ~exclude);
    }
    return count;
}

EdgeLocalProfile local_profile(const Graph& g, VertexPair p) {
    return {p, triangles_through(g, p), c4_through(g, p)};
}

namespace {

// Shared body of the four checkers: walk the given pairs, compare an
// observed count against the property's expected count, record witnesses
// for satisfied pairs and violations otherwise.
template <typename CountFn, typename WitnessFn>
PropertyReport run_check(GraphProperty property,
                         const std::vector<VertexPair>& domain,
                         CountFn count_of, WitnessFn witnesses_of) {
    PropertyReport report;
    report.property = property;
    report.vacuous = domain.empty();
    for (VertexPair p : domain) {
        const int observed = count_of(p);
        if (observed == expected_count(property))
            report.witnesses.emplace_back(p, witnesses_of(p));
        else
            report.violations.push_back({p, observed});
    }
    report.holds = report.violations.empty();
    return report;
}

}  // namespace

PropertyReport check_p2(const Graph& g) {
    return run_check(
        GraphProperty::p2, g.edges(),
        [&](VertexPair p) { return triangles_through(g, p); },
        [&](VertexPair p) {
            return bits_to_vertices(g.neighbor_bits(p.u) & g.neighbor_bits(p.v));
        });
}

PropertyReport check_p3(const Graph& g) {
    const Graph gc = g.complement();
    return run_check(
        GraphProperty::p3, g.non_edges(),
        [&](VertexPair p) { return c4_through(gc, p); },
        [&](VertexPair p) {
            // the unique complement 4-cycle u-v-w-x-u: recover {w, x}
            const std::uint64_t exclude =
                std::uint64_t{1} << p.u | std::uint64_t{1} << p.v;
            std::uint64_t ws = gc.neighbor_bits(p.v) & ~exclude;
            while (ws) {
                const int w = std::countr_zero(ws);
                ws &= ws - 1;
                const std::uint64_t xs =
                    gc.neighbor_bits(w) & gc.neighbor_bits(p.u) & ~exclude;
                if (xs) {
                    const int x = std::countr_zero(xs);
                    return std::vector<int>{std::min(w, x), std::max(w, x)};
                }
            }
            assert(false && "witness requested for pair without a 4-cycle");
            return std::vector<int>{};
        });
}

PropertyReport check_p2bar(const Graph& g) {
    return run_check(
        GraphProperty::p2bar, g.edges(),
        [&](VertexPair p) { return triangles_through(g, p); },
        [&](VertexPair p) {
            return bits_to_vertices(g.neighbor_bits(p.u) & g.neighbor_bits(p.v));
        });
}

PropertyReport check_p3bar(const Graph& g) {
    return run_check(
        GraphProperty::p3bar, g.non_edges(),
        [&](VertexPair p) {
            return std::popcount(g.neighbor_bits(p.u) & g.neighbor_bits(p.v));
        },
        [&](VertexPair p) {
            return bits_to_vertices(g.neighbor_bits(p.u) & g.neighbor_bits(p.v));
        });
}

std::string_view srg_status_name(SrgStatus s) {
    switch (s) {
        case SrgStatus::strongly_regular: return "strongly-regular";
        case SrgStatus::degenerate_empty: return "degenerate-empty";
        case SrgStatus::degenerate_complete: return "degenerate-complete";
        case SrgStatus::not_regular: return "not-regular";
        case SrgStatus::lambda_not_uniform: return "lambda-not-uniform";
        case SrgStatus::mu_not_uniform: return "mu-not-uniform";
    }
    return "?";
}

SrgResult srg_params(const Graph& g) {
    const int n = g.vertex_count();
    const std::size_t edges = g.edge_count();
    if (edges == 0)
        return {SrgStatus::degenerate_empty, std::nullopt,
                "graph has no edges; mu is undefined"};
    if (edges == g.pair_count())
        return {SrgStatus::degenerate_complete, std::nullopt,
                "graph is complete; mu is undefined"};

    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k)
            return {SrgStatus::not_regular, std::nullopt,
                    "not regular: degrees " + std::to_string(k) + " and " +
                        std::to_string(g.degree(v))};

    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int common =
                std::popcount(g.neighbor_bits(u) & g.neighbor_bits(v));
            if (g.has_edge(u, v)) {
                if (lambda == -1) lambda = common;
                else if (common != lambda)
                    return {SrgStatus::lambda_not_uniform, std::nullopt,
                            "adjacent pairs see " + std::to_string(lambda) +
                                " and " + std::to_string(common) +
                                " common neighbors"};
            } else {
                if (mu == -1) mu = common;
                else if (common != mu)
                    return {SrgStatus::mu_not_uniform, std::nullopt,
                            "non-adjacent pairs see " + std::to_string(mu) +
                                " and " + std::to_string(common) +
                                " common neighbors"};
            }
        }
    assert(lambda >= 0 && mu >= 0);
    SrgParams params{n, k, lambda, mu};
    // k(k - lambda - 1) == (v - k - 1) mu holds for every strongly
    // regular graph
    assert(params.k * (params.k - params.lambda - 1) ==
           (params.v - params.k - 1) * params.mu);
    return {SrgStatus::strongly_regular, params, ""};
}

std::optional<long long> solve_srg_degree(long long v, long long lambda,
                                          long long mu) {
    if (v < 1 || lambda < 0 || mu < 0)
        throw std::invalid_argument("solve_srg_degree requires v >= 1, lambda >= 0, mu >= 0");
    // k^2 + bk - c = 0 with b = mu - lambda - 1, c = mu(v - 1)
    const long long b = mu - lambda - 1;
    const long long c = mu * (v - 1);
    const long long disc = b * b + 4 * c;
    if (disc < 0) return std::nullopt;
    long long root = std::llround(std::sqrt(static_cast<double>(disc)));
    while (root * root > disc) --root;
    while ((root + 1) * (root + 1) <= disc) ++root;
    if (root * root != disc) return std::nullopt;
    if ((-b + root) % 2 != 0) return std::nullopt;
    const long long k = (-b + root) / 2;
    if (k < 0) return std::nullopt;
    assert(k * (k - lambda - 1) == (v - k - 1) * mu);
    return k;
}

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v) &&
                (g.neighbor_bits(u) & g.neighbor_bits(v)) != 0)
                return true;
    return false;
}

bool has_c4(const Graph& g) {
    // a 4-cycle exists iff some vertex pair (adjacent or not) has two or
    // more common neighbors: u-w-v-x-u through two commons w, x
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (std::popcount(g.neighbor_bits(u) & g.neighbor_bits(v)) >= 2)
                return true;
    return false;
}

}  // namespace triquad

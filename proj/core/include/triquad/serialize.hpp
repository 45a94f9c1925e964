#pragma once

#include <span>
#include <string>
#include <string_view>

#include "triquad/bounds.hpp"
#include "triquad/enumerate.hpp"
#include "triquad/graph.hpp"
#include "triquad/local_checks.hpp"

namespace triquad {

// Compact single-line JSON for every report type. The shapes are
// documented in docs/formats.md and docs/schemas/.

std::string to_json(const PropertyReport& report);
std::string to_json(const SrgResult& result);
std::string to_json(const BoundsReport& report);
std::string to_json(const Certificate& cert);
std::string to_json(std::span<const Certificate> certs);

/// Lossless adjacency-list JSON: {"n": <int>, "adj": [[sorted neighbors]...]}.
std::string to_adjlist_json(const Graph& g);

/// Inverse of to_adjlist_json. Throws std::invalid_argument on malformed
/// JSON, asymmetric lists, loops, or out-of-range vertices.
Graph parse_adjlist_json(std::string_view text);

}  // namespace triquad

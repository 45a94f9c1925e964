#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "triquad/graph.hpp"

namespace triquad {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Encodes a graph in graph6 short form (n <= 62).
/// Byte 0 is n+63; the upper-triangle bits x(i,j), i<j, ordered by column
/// j then row i, are padded with zeros to a multiple of 6 and each 6-bit
/// group (MSB first) is emitted as group+63.
/// Throws std::invalid_argument for n > 62.
std::string to_graph6(const Graph& g);

/// Decodes graph6 short form. A single trailing newline is tolerated.
/// Throws Graph6Error on malformed input: bytes outside 63..126, the
/// long-form marker '~', a truncated or oversized payload, or nonzero
/// padding bits.
Graph parse_graph6(std::string_view text);

}  // namespace triquad

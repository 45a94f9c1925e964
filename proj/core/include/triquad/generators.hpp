#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "triquad/graph.hpp"

namespace triquad {

enum class GeneratorKind { complete, cycle, empty, bowtie, rook, paley };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::empty;
    std::vector<long> params;

    /// Parses a generator by name ("complete", "cycle", "empty", "bowtie",
    /// "rook", "paley"). Throws std::invalid_argument on an unknown name.
    /// Parameter validation happens in generate().
    static GeneratorSpec parse(std::string_view name, std::span<const long> params);
};

/// Materializes a named graph. Throws std::invalid_argument on bad
/// parameters (wrong arity, cycle length < 3, rook dimension < 1,
/// paley modulus not a prime congruent to 1 mod 4, size over 64).
Graph generate(const GeneratorSpec& spec);

Graph complete_graph(int k);
Graph cycle_graph(int k);   // k >= 3
Graph empty_graph(int n);
Graph bowtie_graph();       // two triangles sharing vertex 0
Graph rook_graph(int m, int n);  // m*n cells, adjacent iff same row or column
Graph paley_graph(int q);   // q prime, q = 1 (mod 4); u~v iff u-v is a nonzero square mod q

}  // namespace triquad

#include "triquad/generators.hpp"

#include <stdexcept>
#include <string>

namespace triquad {

namespace {

void require_arity(const GeneratorSpec& spec, std::size_t arity,
                   const char* name) {
    if (spec.params.size() != arity)
        throw std::invalid_argument(std::string(name) + " takes " +
                                    std::to_string(arity) + " parameter(s), got " +
                                    std::to_string(spec.params.size()));
}

int as_count(long value, const char* what) {
    if (value < 0 || value > Graph::max_vertices)
        throw std::invalid_argument(std::string(what) + " " +
                                    std::to_string(value) + " outside [0, 64]");
    return static_cast<int>(value);
}

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view name,
                                   std::span<const long> params) {
    GeneratorSpec spec;
    spec.params.assign(params.begin(), params.end());
    if (name == "complete") spec.kind = GeneratorKind::complete;
    else if (name == "cycle") spec.kind = GeneratorKind::cycle;
    else if (name == "empty") spec.kind = GeneratorKind::empty;
    else if (name == "bowtie") spec.kind = GeneratorKind::bowtie;
    else if (name == "rook") spec.kind = GeneratorKind::rook;
    else if (name == "paley") spec.kind = GeneratorKind::paley;
    else
        throw std::invalid_argument("unknown generator '" + std::string(name) +
                                    "' (expected complete, cycle, empty, "
                                    "bowtie, rook, or paley)");
    return spec;
}

Graph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::complete:
            require_arity(spec, 1, "complete");
            return complete_graph(as_count(spec.params[0], "complete size"));
        case GeneratorKind::cycle:
            require_arity(spec, 1, "cycle");
            if (spec.params[0] < 3)
                throw std::invalid_argument("cycle length must be >= 3");
            return cycle_graph(as_count(spec.params[0], "cycle length"));
        case GeneratorKind::empty:
            require_arity(spec, 1, "empty");
            return empty_graph(as_count(spec.params[0], "empty size"));
        case GeneratorKind::bowtie:
            require_arity(spec, 0, "bowtie");
            return bowtie_graph();
        case GeneratorKind::rook: {
            require_arity(spec, 2, "rook");
            if (spec.params[0] < 1 || spec.params[1] < 1)
                throw std::invalid_argument("rook dimensions must be >= 1");
            const long cells = spec.params[0] * spec.params[1];
            as_count(cells, "rook vertex count");
            return rook_graph(static_cast<int>(spec.params[0]),
                              static_cast<int>(spec.params[1]));
        }
        case GeneratorKind::paley: {
            require_arity(spec, 1, "paley");
            const long q = spec.params[0];
            if (!is_prime(q))
                throw std::invalid_argument("paley modulus " + std::to_string(q) +
                                            " is not prime");
            if (q % 4 != 1)
                throw std::invalid_argument("paley modulus " + std::to_string(q) +
                                            " is not 1 mod 4");
            return paley_graph(as_count(q, "paley modulus"));
        }
    }
    throw std::invalid_argument("unhandled generator kind");
}

Graph complete_graph(int k) {
    std::vector<VertexPair> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.push_back({u, v});
    return Graph::build(k, e);
}

Graph cycle_graph(int k) {
    std::vector<VertexPair> e;
    for (int v = 0; v < k; ++v) e.push_back(ordered_pair(v, (v + 1) % k));
    return Graph::build(k, e);
}

Graph empty_graph(int n) { return Graph::build(n, {}); }

Graph bowtie_graph() {
    const VertexPair e[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
    return Graph::build(5, e);
}

Graph rook_graph(int m, int n) {
    std::vector<VertexPair> e;
    const auto cell = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            for (int j2 = j + 1; j2 < n; ++j2) e.push_back({cell(i, j), cell(i, j2)});
            for (int i2 = i + 1; i2 < m; ++i2) e.push_back({cell(i, j), cell(i2, j)});
        }
    return Graph::build(m * n, e);
}

Graph paley_graph(int q) {
    std::vector<bool> residue(static_cast<std::size_t>(q), false);
    for (long x = 1; x < q; ++x)
        residue[static_cast<std::size_t>(x * x % q)] = true;
    std::vector<VertexPair> e;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (residue[static_cast<std::size_t>((v - u) % q)]) e.push_back({u, v});
    return Graph::build(q, e);
}

}  // namespace triquad

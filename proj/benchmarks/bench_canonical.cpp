#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "triquad/canonical.hpp"
#include "triquad/generators.hpp"
#include "triquad/graph.hpp"

namespace {

using namespace triquad;

std::vector<Graph> random_batch(int n, int count) {
    std::mt19937_64 rng(77);
    std::vector<Graph> batch;
    for (int i = 0; i < count; ++i) {
        std::vector<VertexPair> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) e.push_back({u, v});
        batch.push_back(Graph::build(n, e));
    }
    return batch;
}

void BM_CanonicalRandom(benchmark::State& state) {
    const auto batch = random_batch(static_cast<int>(state.range(0)), 64);
    for (auto _ : state)
        for (const Graph& g : batch)
            benchmark::DoNotOptimize(canonical_form(g).canon_g6.size());
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_CanonicalRandom)->Arg(6)->Arg(8)->Arg(10);

// worst cases for a permutation search: everything is a twin or a tie
void BM_CanonicalEmpty10(benchmark::State& state) {
    const Graph g = empty_graph(10);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).graph);
}
BENCHMARK(BM_CanonicalEmpty10);

void BM_CanonicalCycle10(benchmark::State& state) {
    const Graph g = cycle_graph(10);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).graph);
}
BENCHMARK(BM_CanonicalCycle10);

void BM_CanonicalRook33(benchmark::State& state) {
    const Graph g = rook_graph(3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).graph);
}
BENCHMARK(BM_CanonicalRook33);

}  // namespace

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "triquad/generators.hpp"
#include "triquad/graph.hpp"
#include "triquad/local_checks.hpp"
#include "triquad/oracle.hpp"

namespace {

using namespace triquad;

Graph dense_random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) e.push_back({u, v});
    return Graph::build(n, e);
}

void BM_TrianglesThroughRook88(benchmark::State& state) {
    const Graph g = rook_graph(8, 8);
    const auto edges = g.edges();
    for (auto _ : state) {
        int total = 0;
        for (const VertexPair& e : edges) total += triangles_through(g, e);
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(edges.size()));
}
BENCHMARK(BM_TrianglesThroughRook88);

void BM_C4ThroughRandom64(benchmark::State& state) {
    const Graph g = dense_random(64, 1);
    const auto edges = g.edges();
    for (auto _ : state) {
        int total = 0;
        for (const VertexPair& e : edges) total += c4_through(g, e);
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(edges.size()));
}
BENCHMARK(BM_C4ThroughRandom64);

void BM_CheckP2P3Random(benchmark::State& state) {
    const Graph g = dense_random(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_p2(g).holds);
        benchmark::DoNotOptimize(check_p3(g).holds);
    }
}
BENCHMARK(BM_CheckP2P3Random)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_NaiveVsFastTriangles(benchmark::State& state) {
    const Graph g = dense_random(12, 3);
    for (auto _ : state) {
        int total = 0;
        for (const VertexPair& e : g.edges())
            total += oracle::naive_triangles_through(g, e);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_NaiveVsFastTriangles);

}  // namespace

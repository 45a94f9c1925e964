#include <benchmark/benchmark.h>

#include "triquad/enumerate.hpp"

namespace {

using namespace triquad;

void BM_EnumerateAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(n).size());
}
BENCHMARK(BM_EnumerateAll)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumerateAll8Workers(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(8, workers).size());
}
BENCHMARK(BM_EnumerateAll8Workers)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SearchPruned(benchmark::State& state) {
    SearchConfig cfg;
    cfg.n_max = static_cast<int>(state.range(0));
    cfg.prune = true;
    for (auto _ : state) benchmark::DoNotOptimize(search_p2p3(cfg).size());
}
BENCHMARK(BM_SearchPruned)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SearchUnpruned8(benchmark::State& state) {
    SearchConfig cfg;
    cfg.n_max = 8;
    cfg.prune = false;
    for (auto _ : state) benchmark::DoNotOptimize(search_p2p3(cfg).size());
}
BENCHMARK(BM_SearchUnpruned8)->Unit(benchmark::kMillisecond);

}  // namespace

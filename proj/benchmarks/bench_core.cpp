#include <benchmark/benchmark.h>

#include "superperm/bounds.hpp"
#include "superperm/cycle_census.hpp"
#include "superperm/pathfinder.hpp"
#include "superperm/transition_graph.hpp"

namespace {

void BM_EdgeWeightQueries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    spm::GraphBuildOptions lazy;
    lazy.materialize_max_n = 0;
    const spm::TransitionGraph g = spm::build_graph(n, spm::GraphKind::H, lazy);
    const std::uint64_t V = g.vertex_count();
    std::uint64_t i = 0, j = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.weight(i, j));
        j = (j + 7) % V;
        i = (i + (j == 0 ? 3 : 0)) % V;
        if (i == j) j = (j + 1) % V;
    }
}
BENCHMARK(BM_EdgeWeightQueries)->Arg(6)->Arg(7)->Arg(8);

void BM_GraphBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spm::build_graph(n, spm::GraphKind::H));
}
BENCHMARK(BM_GraphBuild)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CensusFormula(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spm::census_formula(n).total_cycles());
}
BENCHMARK(BM_CensusFormula)->Arg(8)->Arg(12)->Arg(20);

void BM_CensusEnumerated(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spm::census_enumerated(n).total_cycles());
}
BENCHMARK(BM_CensusEnumerated)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_GreedyCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spm::greedy_cycle_path(n).length);
}
BENCHMARK(BM_GreedyCycle)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_VerifyWord(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const spm::SearchResult r = spm::greedy_cycle_path(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(spm::verify_universal_word(r.word).ok);
}
BENCHMARK(BM_VerifyWord)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BoundB(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spm::bound_B(n));
}
BENCHMARK(BM_BoundB)->Arg(8)->Arg(16)->Arg(23);

}  // namespace

BENCHMARK_MAIN();

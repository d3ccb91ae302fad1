// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "lsc/cover_model.hpp"
#include "lsc/generate.hpp"
#include "lsc/kernel.hpp"
#include "lsc/triple_coverage.hpp"

using namespace lsc;

namespace {

const Arrangement& arrangement_for(int n) {
    static std::map<int, Arrangement> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(random_axis_parallel(n, 4 * n, 1, n))).first;
    return it->second;
}

SetCollection random_sets(int count, int universe) {
    std::mt19937_64 rng(5);
    SetCollection sets;
    for (int i = 0; i < count; ++i) {
        std::vector<int> s;
        for (int e = 0; e < universe; ++e)
            if (rng() % 8 == 0) s.push_back(e);
        sets.push_back(s);
    }
    return sets;
}

void BM_TripleCoverageSerial(benchmark::State& state) {
    const Arrangement& arr = arrangement_for(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(triple_coverage_max_serial(arr));
}

void BM_TripleCoverageParallel(benchmark::State& state) {
    const Arrangement& arr = arrangement_for(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(triple_coverage_max(arr));
}

void BM_CountPairsSerial(benchmark::State& state) {
    SetCollection sets = random_sets(static_cast<int>(state.range(0)), 64);
    for (auto _ : state) benchmark::DoNotOptimize(count_pairs_serial(sets));
}

void BM_CountPairsParallel(benchmark::State& state) {
    SetCollection sets = random_sets(static_cast<int>(state.range(0)), 64);
    for (auto _ : state) benchmark::DoNotOptimize(count_pairs(sets));
}

}  // namespace

BENCHMARK(BM_TripleCoverageSerial)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TripleCoverageParallel)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPairsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPairsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

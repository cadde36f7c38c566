#include <benchmark/benchmark.h>

#include "fls/catalog.hpp"
#include "fls/coloring.hpp"
#include "fls/enumerate.hpp"

namespace {

fls::FiniteLinearSpace space_for(int id) {
  switch (id) {
    case 0: return fls::pg2(3);
    case 1: return fls::named("MR15_3r").geometry.space();
    default: return fls::pg2(4);
  }
}

void BM_BlockingSerial(benchmark::State& state) {
  const auto s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fls::blocking_sets_serial(s));
}

void BM_BlockingParallel(benchmark::State& state) {
  const auto s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fls::blocking_sets_parallel(s));
}

void BM_ColouringScanSerial(benchmark::State& state) {
  const auto s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fls::proper_colourings_serial(s));
}

void BM_ColouringScanParallel(benchmark::State& state) {
  const auto s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fls::proper_colourings_parallel(s));
}

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fls::all_spaces(static_cast<int>(state.range(0))));
}

}  // namespace

// 0 = PG(2,3), 1 = a 15-point space, 2 = PG(2,4)
BENCHMARK(BM_BlockingSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockingParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColouringScanSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColouringScanParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

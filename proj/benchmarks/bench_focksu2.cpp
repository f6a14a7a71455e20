#include <benchmark/benchmark.h>

#include "emlab/focksu2.hpp"

using namespace emlab::focksu2;

static void BM_U2Generators(benchmark::State& state) {
  const TwoModeSpace space(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    U2Generators g = u2_generators(space);
    benchmark::DoNotOptimize(g.a12.m.data());
  }
}
BENCHMARK(BM_U2Generators)->Arg(8)->Arg(16)->Arg(32);

static void BM_CasimirSubspace(benchmark::State& state) {
  const TwoModeSpace space(16);
  for (auto _ : state) benchmark::DoNotOptimize(casimir_on_subspace(space, 10));
}
BENCHMARK(BM_CasimirSubspace);

static void BM_PlanckOccupancy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(planck_occupancy(1.0, 1.0, 60));
}
BENCHMARK(BM_PlanckOccupancy);

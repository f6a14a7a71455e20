#include <benchmark/benchmark.h>

#include "emlab/dualmaxwell.hpp"

using namespace emlab;
using namespace emlab::dualmaxwell;

static void BM_DualStepVacuum(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  FieldState s(g);
  s.e = divergence_free_random(g, 1);
  s.h = divergence_free_random(g, 2);
  const SourceSet none;
  const double dt = 0.5 * cfl_limit(g);
  for (auto _ : state) {
    s = step(s, none, dt);
    benchmark::DoNotOptimize(s.e.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_DualStepVacuum)->Arg(16)->Arg(32)->Arg(64);

static void BM_DualStepSourced(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  FieldState s(g);
  s.e = divergence_free_random(g, 3);
  SourceSet src;
  src.j_e = Schedule<VectorFieldGrid>::constant(divergence_free_random(g, 4));
  src.j_m = Schedule<VectorFieldGrid>::constant(divergence_free_random(g, 5));
  const double dt = 0.5 * cfl_limit(g);
  for (auto _ : state) {
    s = step(s, src, dt);
    benchmark::DoNotOptimize(s.h.values.data());
  }
}
BENCHMARK(BM_DualStepSourced)->Arg(16)->Arg(32);

static void BM_GaussResiduals(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  FieldState s(g);
  s.e = divergence_free_random(g, 6);
  s.h = divergence_free_random(g, 7);
  const SourceSet none;
  for (auto _ : state) {
    const GaussResiduals r = gauss_residuals(s, none);
    benchmark::DoNotOptimize(r.re);
  }
}
BENCHMARK(BM_GaussResiduals)->Arg(32);

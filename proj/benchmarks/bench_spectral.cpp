#include <benchmark/benchmark.h>

#include "emlab/helmholtz.hpp"
#include "emlab/propagator.hpp"
#include "emlab/randomfields.hpp"

using namespace emlab;

static void BM_FftRoundTrip(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  VectorFieldGrid f = random_smooth_vector(g, 1);
  for (auto _ : state) {
    SpectralVector vhat = spectral_of(f);
    VectorFieldGrid back = inverse_to_vector(g, vhat);
    benchmark::DoNotOptimize(back.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_FftRoundTrip)->Arg(16)->Arg(32)->Arg(64);

static void BM_HelmholtzSplit(benchmark::State& state) {
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  VectorFieldGrid f = random_smooth_vector(g, 2);
  for (auto _ : state) {
    HelmholtzParts parts = helmholtz_split(f);
    benchmark::DoNotOptimize(parts.transverse.values.data());
  }
}
BENCHMARK(BM_HelmholtzSplit)->Arg(16)->Arg(32);

static void BM_EvolveAndResiduals(benchmark::State& state) {
  using namespace propagator;
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  SpectralModeSet m = random_modes(g, 3);
  const double dtp = default_probe_dt(g);
  for (auto _ : state) {
    m = evolve(m, 0.01);
    const MaxwellResiduals r = maxwell_residuals(m, dtp);
    benchmark::DoNotOptimize(r.r1);
  }
}
BENCHMARK(BM_EvolveAndResiduals)->Arg(16)->Arg(32);

static void BM_Synthesize(benchmark::State& state) {
  using namespace propagator;
  const GridSpec g{static_cast<int>(state.range(0)), 0.25, 1.0};
  const SpectralModeSet m = random_modes(g, 4);
  for (auto _ : state) {
    SynthesizedFields f = synthesize(m);
    benchmark::DoNotOptimize(f.e.values.data());
  }
}
BENCHMARK(BM_Synthesize)->Arg(16)->Arg(32);

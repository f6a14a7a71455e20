#include <benchmark/benchmark.h>

#include "emlab/brackets.hpp"
#include "emlab/randomfields.hpp"

using namespace emlab;
using namespace emlab::brackets;

namespace {

CanonicalLattice make_state(int n) {
  const GridSpec g{n, 0.25, 1.0};
  CanonicalLattice state(g);
  for (int mu = 0; mu < 4; ++mu) {
    state.a[mu] = random_smooth_scalar(g, 10 + mu, 3).values;
    state.b[mu] = random_smooth_scalar(g, 20 + mu, 3).values;
  }
  return state;
}

}  // namespace

static void BM_HamiltonianEval(benchmark::State& state) {
  const CanonicalLattice s = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian(s));
}
BENCHMARK(BM_HamiltonianEval)->Arg(8)->Arg(16);

static void BM_SecondaryConstraintResidual(benchmark::State& state) {
  const CanonicalLattice s = make_state(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(secondary_constraint_residual(s, s.spec.index(3, 5, 7)));
}
BENCHMARK(BM_SecondaryConstraintResidual);

static void BM_ChainClosureFd(benchmark::State& state) {
  const CanonicalLattice s = make_state(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(constraint_chain_closure(s, {s.spec.index(2, 2, 2)}));
}
BENCHMARK(BM_ChainClosureFd);

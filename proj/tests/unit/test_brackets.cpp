#include "doctest.h"
#include "emlab/brackets.hpp"
#include "emlab/randomfields.hpp"

using namespace emlab;
using namespace emlab::brackets;

namespace {

const GridSpec kGrid{8, 0.5, 1.0};

CanonicalLattice random_state(std::uint64_t seed) {
  CanonicalLattice state(kGrid);
  for (int mu = 0; mu < 4; ++mu) {
    state.a[mu] = random_smooth_scalar(kGrid, seed + mu, 2).values;
    state.b[mu] = random_smooth_scalar(kGrid, seed + 10 + mu, 2).values;
  }
  return state;
}

}  // namespace

TEST_CASE("hamiltonian: vacuum, uniform momentum, and single shear mode") {
  CanonicalLattice state(kGrid);
  CHECK(hamiltonian(state) == 0.0);

  const double e0 = 1.75;
  for (auto& v : state.b[1]) v = e0;
  const double volume = kGrid.volume();
  CHECK(std::abs(hamiltonian(state) - 0.5 * e0 * e0 * volume) <= 1e-12 * volume);

  // A_y = A0 sin(2 pi x / L): H = 1/2 (2 pi A0 / L)^2 V / 2 within O(h^2)
  CanonicalLattice mode(kGrid);
  const double a0 = 0.8;
  const double k = 2.0 * kPi / kGrid.length();
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz)
        mode.a[2][kGrid.index(ix, iy, iz)] = a0 * std::sin(k * ix * kGrid.h);
  const double expected = 0.5 * (k * a0) * (k * a0) * volume / 2.0;
  const double got = hamiltonian(mode);
  CHECK(std::abs(got - expected) <= expected * (k * kGrid.h) * (k * kGrid.h) / 2.0);
  // the discrete sum is exactly the analytic value with k -> sin(kh)/h
  const double ktilde = std::sin(k * kGrid.h) / kGrid.h;
  CHECK(std::abs(got - 0.5 * ktilde * ktilde * a0 * a0 * volume / 2.0) <= 1e-12 * expected);
}

TEST_CASE("total hamiltonian adds the multiplier term") {
  CanonicalLattice state = random_state(5);
  ScalarFieldGrid v = random_smooth_scalar(kGrid, 77, 2);

  SUBCASE("vanishes on the constraint surface") {
    for (auto& val : state.b[0]) val = 0.0;
    CHECK(total_hamiltonian(state, v) == hamiltonian(state));
  }
  SUBCASE("zero multiplier") {
    ScalarFieldGrid zero(kGrid);
    CHECK(total_hamiltonian(state, zero) == hamiltonian(state));
  }
  SUBCASE("uniform unit multiplier and momentum integrate to the volume") {
    CanonicalLattice unit(kGrid);
    for (auto& val : unit.b[0]) val = 1.0;
    ScalarFieldGrid one = make_scalar_field(kGrid, [](Vec3) { return 1.0; });
    CHECK(std::abs(total_hamiltonian(unit, one) - kGrid.volume()) <= 1e-12 * kGrid.volume());
  }
}

TEST_CASE("canonical bracket relations hold exactly") {
  CanonicalLattice state = random_state(17);
  const double inv_h3 = 1.0 / kGrid.cell_volume();
  const std::size_t x0 = kGrid.index(1, 2, 3);
  const std::size_t x1 = kGrid.index(4, 0, 6);

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      ValueFunctional b(Slot::B, mu, x0);
      ValueFunctional a_same(Slot::A, nu, x0);
      ValueFunctional a_other(Slot::A, nu, x1);
      const double expected = mu == nu ? -inv_h3 : 0.0;
      CHECK(poisson_bracket(b, a_same, state) == doctest::Approx(expected).epsilon(1e-14));
      CHECK(poisson_bracket(b, a_other, state) == 0.0);
    }

  // [A,A] and [B,B] vanish identically
  ValueFunctional a1(Slot::A, 1, x0), a2(Slot::A, 2, x1);
  ValueFunctional b1(Slot::B, 1, x0), b2(Slot::B, 2, x1);
  CHECK(poisson_bracket(a1, a2, state) == 0.0);
  CHECK(poisson_bracket(b1, b2, state) == 0.0);
}

TEST_CASE("bracket antisymmetry for analytic functionals") {
  CanonicalLattice state = random_state(23);
  HamiltonianFunctional h(DerivativeMode::Analytic);

  ValueFunctional a2(Slot::A, 2, kGrid.index(2, 5, 1));
  const double fg = poisson_bracket(a2, h, state);
  const double gf = poisson_bracket(h, a2, state);
  CHECK(std::abs(fg) > 1e-6);  // nonzero bracket so the check has teeth
  CHECK(std::abs(fg + gf) <= 1e-12 * std::abs(fg));

  DivBFunctional divb(kGrid, kGrid.index(2, 5, 1));
  const double dg = poisson_bracket(divb, h, state);
  const double gd = poisson_bracket(h, divb, state);
  CHECK(std::abs(dg + gd) <= 1e-12);

  CHECK(poisson_bracket(h, h, state) == 0.0);
}

TEST_CASE("analytic hamiltonian gradient matches finite differences") {
  CanonicalLattice state = random_state(31);
  HamiltonianFunctional analytic(DerivativeMode::Analytic);
  HamiltonianFunctional fd(DerivativeMode::FiniteDifference);
  fd.set_fd_step(suggested_fd_step(state));

  GaussianStream gs(1);
  for (int trial = 0; trial < 24; ++trial) {
    const int mu = static_cast<int>(gs.uniform() * 4);
    const std::size_t site = static_cast<std::size_t>(gs.uniform() * kGrid.size());
    const Slot slot = gs.uniform() < 0.5 ? Slot::A : Slot::B;
    const double da = analytic.partial(state, slot, mu, site);
    const double dn = fd.partial(state, slot, mu, site);
    CHECK(std::abs(da - dn) <= 1e-8 * std::max(1.0, std::abs(da)));
  }
}

TEST_CASE("secondary constraint: [B^0, H] reproduces div B") {
  // analytic oracle: B^x = sin(2 pi x / L) gives div B = ktilde cos(...) on the stencil
  CanonicalLattice state(kGrid);
  const double k = 2.0 * kPi / kGrid.length();
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz)
        state.b[1][kGrid.index(ix, iy, iz)] = std::sin(k * ix * kGrid.h);

  const std::size_t x0 = kGrid.index(3, 1, 5);
  ValueFunctional b0(Slot::B, 0, x0);
  HamiltonianFunctional h(DerivativeMode::FiniteDifference);
  h.set_fd_step(suggested_fd_step(state));
  const double bracket = poisson_bracket(b0, h, state);
  const double ktilde = std::sin(k * kGrid.h) / kGrid.h;
  CHECK(bracket == doctest::Approx(ktilde * std::cos(k * 3 * kGrid.h)).epsilon(1e-8));
  CHECK(std::abs(bracket - k * std::cos(k * 3 * kGrid.h)) <= k * k * k * kGrid.h * kGrid.h / 6.0 * 1.1);

  CHECK(std::abs(secondary_constraint_residual(state, x0)) <= 1e-8);

  CanonicalLattice uniform(kGrid);
  for (auto& v : uniform.b[2]) v = 3.0;
  CHECK(std::abs(secondary_constraint_residual(uniform, x0)) <= 1e-10);

  CanonicalLattice zero(kGrid);
  CHECK(secondary_constraint_residual(zero, x0) == 0.0);
}

TEST_CASE("secondary constraint residual on random smooth states, both derivative paths") {
  for (std::uint64_t seed : {101, 202, 303}) {
    CanonicalLattice state = random_state(seed);
    const std::size_t site = kGrid.index(2, 2, 2);
    CHECK(std::abs(secondary_constraint_residual(state, site, DerivativeMode::FiniteDifference)) <= 1e-8);
    CHECK(std::abs(secondary_constraint_residual(state, site, DerivativeMode::Analytic)) <= 1e-12);
  }
}

TEST_CASE("constraint chain closes: [div B, H] = 0") {
  CanonicalLattice zero(kGrid);
  CHECK(constraint_chain_closure(zero) == 0.0);

  // plane-wave state
  CanonicalLattice mode(kGrid);
  const double k = 2.0 * kPi / kGrid.length();
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz) {
        mode.a[2][kGrid.index(ix, iy, iz)] = std::sin(k * ix * kGrid.h);
        mode.b[1][kGrid.index(ix, iy, iz)] = std::cos(k * iy * kGrid.h);
      }
  CHECK(constraint_chain_closure(mode) <= 1e-8);

  for (std::uint64_t seed : {42, 43}) {
    CanonicalLattice state = random_state(seed);
    // the FD path carries round-off ~ |H| eps_mach / fd_step per probe
    CHECK(constraint_chain_closure(state, {}, DerivativeMode::FiniteDifference) <= 1e-7);
    CHECK(constraint_chain_closure(state, {}, DerivativeMode::Analytic) <= 1e-12);
  }
}

TEST_CASE("non-finite probes are reported as evaluation failures") {
  struct Exploding final : LatticeFunctional {
    std::string name() const override { return "exploding"; }
    double eval(const CanonicalLattice& s) const override {
      return 1.0 / (s.a[0][0] - s.a[0][0]);  // NaN on any state
    }
  };
  CanonicalLattice state(kGrid);
  Exploding f;
  CHECK_THROWS_AS(f.partial(state, Slot::A, 0, 0), std::runtime_error);
}

#include "doctest.h"
#include "emlab/differential.hpp"
#include "emlab/helmholtz.hpp"
#include "emlab/propagator.hpp"
#include "emlab/randomfields.hpp"

using namespace emlab;
using namespace emlab::propagator;

namespace {

const GridSpec kGrid{16, 0.5, 1.0};

SpectralModeSet single_mode_set(const GridSpec& g, int mx, int my, int mz, int alpha, Complex c) {
  SpectralModeSet m = make_mode_set(g);
  const auto& modes = m.basis->modes();
  const Vec3 k = k_vector(g.wrap(mx), g.wrap(my), g.wrap(mz), g);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (norm(modes[i].k - k) < 1e-12) {
      m.amp(i, alpha) = c;
      return m;
    }
  }
  FAIL("mode not found");
  return m;
}

}  // namespace

TEST_CASE("polarization basis is orthonormal, transverse, and deterministic") {
  const auto basis = basis_for(kGrid);
  REQUIRE(!basis->modes().empty());
  for (const Mode& m : basis->modes()) {
    CHECK(std::abs(dot(m.e1, m.e1) - 1.0) <= 1e-14);
    CHECK(std::abs(dot(m.e2, m.e2) - 1.0) <= 1e-14);
    CHECK(std::abs(dot(m.e1, m.e2)) <= 1e-14);
    CHECK(std::abs(dot(m.e1, m.k)) <= 1e-14 * norm(m.k));
    CHECK(std::abs(dot(m.e2, m.k)) <= 1e-14 * norm(m.k));
    CHECK(m.omega == doctest::Approx(kGrid.c * norm(m.k)).epsilon(1e-14));
  }
  // no k = 0, no Nyquist-bearing wavevectors
  const double knyq = 2.0 * kPi * (kGrid.n / 2) / kGrid.length();
  for (const Mode& m : basis->modes()) {
    CHECK(norm(m.k) > 0);
    CHECK(std::abs(std::abs(m.k.x) - knyq) > 1e-12);
    CHECK(std::abs(std::abs(m.k.y) - knyq) > 1e-12);
    CHECK(std::abs(std::abs(m.k.z) - knyq) > 1e-12);
  }
  const auto again = basis_for(kGrid);
  CHECK(again.get() == basis.get());
}

TEST_CASE("synthesize: empty set gives zero fields, outputs are real") {
  SpectralModeSet empty = make_mode_set(kGrid);
  const SynthesizedFields f = synthesize(empty);
  CHECK(max_abs(f.a) == 0.0);
  CHECK(max_abs(f.e) == 0.0);
  CHECK(max_abs(f.h) == 0.0);

  SpectralModeSet rnd = random_modes(kGrid, 5);
  const SynthesizedFields g = synthesize(rnd);
  CHECK(g.max_imag <= 1e-12 * std::max(1.0, max_abs(g.e)));
}

TEST_CASE("synthesize: spectral H equals the exact curl of A, near stencil curl") {
  SpectralModeSet one = single_mode_set(kGrid, 1, 0, 0, 1, Complex(0.7, -0.3));
  const SynthesizedFields f = synthesize(one);

  SpectralVector ahat = spectral_of(f.a);
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz) {
        const std::size_t idx = kGrid.index(ix, iy, iz);
        ahat[idx] = Complex(0, 1) * cross(k_vector(ix, iy, iz, kGrid), ahat[idx]);
      }
  const VectorFieldGrid curl_spectral = inverse_to_vector(kGrid, ahat);
  CHECK(max_abs_diff(curl_spectral, f.h) <= 1e-12 * max_abs(f.h));

  const double k = 2.0 * kPi / kGrid.length();
  CHECK(max_abs_diff(curl(f.a), f.h) <= max_abs(f.h) * (k * kGrid.h) * (k * kGrid.h) / 6.0 * 1.1);
}

TEST_CASE("expand: zero fields give zero amplitudes, plane wave hits one mode") {
  VectorFieldGrid zero(kGrid);
  SpectralModeSet m = expand(zero, zero);
  CHECK(amplitude_norm2(m) == 0.0);

  SpectralModeSet one = single_mode_set(kGrid, 0, 2, 0, 2, Complex(1.1, 0.4));
  const SynthesizedFields f = synthesize(one);
  SpectralModeSet back = expand(f.a, f.e);
  int nonzero = 0;
  double recovered = 0;
  for (std::size_t i = 0; i < back.amps.size(); ++i) {
    if (std::abs(back.amps[i]) > 1e-10) {
      ++nonzero;
      recovered = std::abs(back.amps[i]);
    }
  }
  CHECK(nonzero == 1);
  CHECK(recovered == doctest::Approx(std::abs(Complex(1.1, 0.4))).epsilon(1e-12));
}

TEST_CASE("expand/synthesize round trip on random transverse data") {
  SpectralModeSet m = random_modes(kGrid, 42);
  const SynthesizedFields f = synthesize(m);
  SpectralModeSet back = expand(f.a, f.e);
  double worst = 0;
  for (std::size_t i = 0; i < m.amps.size(); ++i)
    worst = std::max(worst, std::abs(m.amps[i] - back.amps[i]));
  CHECK(worst <= 1e-10 * std::sqrt(amplitude_norm2(m)));

  const SynthesizedFields f2 = synthesize(back);
  CHECK(max_abs_diff(f2.a, f.a) <= 1e-10 * max_abs(f.a));
  CHECK(max_abs_diff(f2.e, f.e) <= 1e-10 * max_abs(f.e));
}

TEST_CASE("expand rejects longitudinal and non-representable input") {
  const double k = 2.0 * kPi / kGrid.length();
  ScalarFieldGrid chi = make_scalar_field(kGrid, [k](Vec3 p) { return std::sin(k * p.x); });
  VectorFieldGrid grad = gradient(chi);
  VectorFieldGrid zero(kGrid);
  CHECK_THROWS_AS(expand(grad, zero), std::invalid_argument);

  VectorFieldGrid dc = make_vector_field(kGrid, [](Vec3) { return Vec3{0.5, 0, 0}; });
  CHECK_THROWS_AS(expand(dc, zero), std::invalid_argument);
}

TEST_CASE("evolve: identity at dt=0, unitary phase, full period return, group property") {
  SpectralModeSet m = random_modes(kGrid, 9);

  SpectralModeSet same = evolve(m, 0.0);
  for (std::size_t i = 0; i < m.amps.size(); ++i) CHECK(same.amps[i] == m.amps[i]);

  SpectralModeSet moved = evolve(m, 0.37);
  CHECK(std::abs(amplitude_norm2(moved) - amplitude_norm2(m)) <= 1e-13 * amplitude_norm2(m));

  SpectralModeSet one = single_mode_set(kGrid, 1, 1, 0, 1, Complex(0.9, 0.1));
  const double omega = kGrid.c * norm(k_vector(1, 1, 0, kGrid));
  SpectralModeSet cycled = evolve(one, 2.0 * kPi / omega);
  double worst = 0;
  for (std::size_t i = 0; i < one.amps.size(); ++i)
    worst = std::max(worst, std::abs(cycled.amps[i] - one.amps[i]));
  CHECK(worst <= 1e-12);

  SpectralModeSet split = evolve(evolve(m, 0.21), 0.16);
  SpectralModeSet direct = evolve(m, 0.37);
  worst = 0;
  for (std::size_t i = 0; i < m.amps.size(); ++i)
    worst = std::max(worst, std::abs(split.amps[i] - direct.amps[i]));
  CHECK(worst <= 1e-13 * std::sqrt(amplitude_norm2(m)));

  SpectralModeSet back = evolve(evolve(m, 0.37), -0.37);
  worst = 0;
  for (std::size_t i = 0; i < m.amps.size(); ++i)
    worst = std::max(worst, std::abs(back.amps[i] - m.amps[i]));
  CHECK(worst <= 1e-13 * std::sqrt(amplitude_norm2(m)));
}

TEST_CASE("energy: single-term sum, conservation, equivalence with the grid energy") {
  SpectralModeSet empty = make_mode_set(kGrid);
  CHECK(energy(empty) == 0.0);

  SpectralModeSet one = single_mode_set(kGrid, 0, 0, 2, 1, Complex(1, 0));
  const double omega = kGrid.c * norm(k_vector(0, 0, 2, kGrid));
  CHECK(energy(one) == doctest::Approx(omega).epsilon(1e-13));

  SpectralModeSet m = random_modes(kGrid, 64);
  const double before = energy(m);
  const double after = energy(evolve(m, 1.234));
  CHECK(std::abs(after - before) <= 1e-12 * before);

  for (std::uint64_t seed : {1, 2, 3, 4}) {
    SpectralModeSet s = random_modes(kGrid, seed);
    const double mode_sum = energy(s);
    const double grid = grid_energy(synthesize(s));
    CHECK(std::abs(mode_sum - grid) <= 1e-10 * mode_sum);
  }

  CHECK(zero_point_sum(m) == zero_point_sum(empty));
  CHECK(zero_point_sum(m) > 0.0);
}

TEST_CASE("hbar convention flag scales the synthesized fields, not the algebra") {
  SpectralModeSet unit = random_modes(kGrid, 12, 1.0);
  SpectralModeSet scaled = random_modes(kGrid, 12, 4.0);
  const SynthesizedFields fu = synthesize(unit);
  const SynthesizedFields fs = synthesize(scaled);
  double worst = 0;
  for (std::size_t i = 0; i < fu.a.values.size(); ++i)
    worst = std::max(worst, norm(fs.a.values[i] - 2.0 * fu.a.values[i]));
  CHECK(worst <= 1e-12 * max_abs(fs.a));
  CHECK(energy(scaled) == doctest::Approx(4.0 * energy(unit)).epsilon(1e-13));
}

TEST_CASE("maxwell residuals vanish for synthesized states and catch violations") {
  const double dtp = default_probe_dt(kGrid);

  SpectralModeSet empty = make_mode_set(kGrid);
  const MaxwellResiduals zero = maxwell_residuals(empty, dtp);
  CHECK(zero.r1 == 0.0);
  CHECK(zero.r2 == 0.0);
  CHECK(zero.r3 == 0.0);
  CHECK(zero.r4 == 0.0);

  SpectralModeSet m = random_modes(kGrid, 31);
  const MaxwellResiduals res = maxwell_residuals(m, dtp);
  CHECK(res.max_relative() <= 1e-10);

  const MaxwellResiduals evolved = maxwell_residuals(evolve(m, 0.5), dtp);
  CHECK(evolved.max_relative() <= 1e-10);

  // detector sanity: inject longitudinal E content through the spectral hook
  const SynthesizedFields f = synthesize(m);
  SpectralVector ehat = spectral_of(f.e);
  SpectralVector hhat = spectral_of(f.h);
  SpectralVector dehat(ehat.size()), dhhat(ehat.size());
  const std::size_t bucket = kGrid.index(1, 0, 0);
  const Vec3 k = k_vector(1, 0, 0, kGrid);
  ehat[bucket] += (0.3 / norm(k)) * to_cvec(k);  // longitudinal amplitude 0.3
  const MaxwellResiduals tainted = maxwell_residuals_spectral(kGrid, ehat, hhat, dehat, dhhat);
  CHECK(tainted.r3 >= 0.99 * 0.3 * norm(k));
}

TEST_CASE("wave equation residual is at probe-truncation level") {
  const double dtp = default_probe_dt(kGrid);

  SpectralModeSet one = single_mode_set(kGrid, 2, 1, 0, 2, Complex(0.4, 0.9));
  CHECK(wave_equation_residual(one, dtp).relative() <= 1e-10);

  SpectralModeSet empty = make_mode_set(kGrid);
  CHECK(wave_equation_residual(empty, dtp).value == 0.0);

  SpectralModeSet m = random_modes(kGrid, 77);
  CHECK(wave_equation_residual(m, dtp).relative() <= 1e-10);
}

TEST_CASE("unitarity and residuals hold across many evolution steps") {
  SpectralModeSet m = random_modes(kGrid, 2024);
  const double n0 = amplitude_norm2(m);
  const double e0 = energy(m);
  const double dtp = default_probe_dt(kGrid);
  double worst_drift = 0;
  for (int step = 0; step < 400; ++step) {
    m = evolve(m, 0.03);
    worst_drift = std::max(worst_drift, std::abs(amplitude_norm2(m) - n0) / n0);
  }
  CHECK(worst_drift <= 1e-12);
  CHECK(std::abs(energy(m) - e0) <= 1e-12 * e0);
  CHECK(maxwell_residuals(m, dtp).max_relative() <= 1e-10);
}

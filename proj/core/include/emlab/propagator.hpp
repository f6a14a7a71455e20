#pragma once

#include <memory>

#include "emlab/fft.hpp"

namespace emlab::propagator {

// One lattice wavevector with its deterministic transverse pair. e1 is the
// Gram-Schmidt projection of the global axis least aligned with k (ties
// broken x -> y -> z), e2 = n x e1; both real, e_a . e_b = delta_ab, e_a . k = 0.
struct Mode {
  std::size_t bucket = 0;   // spectral-array index of k
  std::size_t partner = 0;  // spectral-array index of -k
  Vec3 k;
  double omega = 0;  // c |k|
  Vec3 e1, e2;
};

// Transverse plane-wave basis over every representable lattice wavevector:
// k != 0 and, for even n, no component on the m = -n/2 plane (those modes are
// real on the lattice, so their first time derivative has no consistent
// spectral sign and they cannot carry a propagating pair).
class PolarizationBasis {
 public:
  explicit PolarizationBasis(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  const std::vector<Mode>& modes() const { return modes_; }
  double max_omega() const { return max_omega_; }

  // mode index owning a spectral bucket, -1 if not representable
  std::ptrdiff_t mode_at(std::size_t bucket) const { return by_bucket_[bucket]; }

 private:
  GridSpec spec_;
  std::vector<Mode> modes_;
  std::vector<std::ptrdiff_t> by_bucket_;
  double max_omega_ = 0;
};

std::shared_ptr<const PolarizationBasis> basis_for(const GridSpec& spec);

// Canonical amplitudes c_{k,alpha}: the field is
//   A = sum_{k,alpha} sqrt(hbar c^2 / (2 omega V)) [ e_alpha e^{ik.r} c_{k,alpha} + c.c. ],
// E = -(1/c) dA/dt, H = curl A (exact per mode). The sqrt(hbar) factor keeps
// the amplitudes dimensionless; hbar is a stored convention scalar, not a
// second code path.
struct SpectralModeSet {
  std::shared_ptr<const PolarizationBasis> basis;
  double hbar = 1.0;
  std::vector<Complex> amps;  // 2 per mode: (alpha=1, alpha=2)

  const GridSpec& spec() const { return basis->spec(); }
  Complex& amp(std::size_t mode, int alpha) { return amps[2 * mode + (alpha - 1)]; }
  Complex amp(std::size_t mode, int alpha) const { return amps[2 * mode + (alpha - 1)]; }
};

SpectralModeSet make_mode_set(const GridSpec& spec, double hbar = 1.0);

// Inverts the plane-wave expansion of a transverse (A, E) pair; the E field
// fixes the phases. Inputs with relative spectral divergence, mean, or
// Nyquist content above tol are rejected as non-representable.
SpectralModeSet expand(const VectorFieldGrid& a, const VectorFieldGrid& e_field,
                       double hbar = 1.0, double tol = 1e-8);

struct SynthesizedFields {
  VectorFieldGrid a, e, h;
  double max_imag = 0;  // largest imaginary residue dropped by the inverse FFT
};

SynthesizedFields synthesize(const SpectralModeSet& m);

// c_{k,alpha} -> c_{k,alpha} exp(-i omega dt); exact, any sign of dt.
SpectralModeSet evolve(const SpectralModeSet& m, double dt);

// sum hbar omega |c|^2 (classical-limit reading; the state-independent
// zero-point constant is reported separately).
double energy(const SpectralModeSet& m);
double zero_point_sum(const SpectralModeSet& m);
double amplitude_norm2(const SpectralModeSet& m);  // sum |c|^2

// 1/2 integral (E^2 + H^2) dV; H = curl A per mode, so this is the
// 1/2 integral (E^2 + (curl A)^2) energy functional on the grid.
double grid_energy(const SynthesizedFields& f);

// Residual max-norms of the four Maxwell equations, evaluated per spectral
// mode. Time derivatives are the central differences of the exact evolution
// over +-dt_probe, reduced analytically per mode (sin(w dt)/dt in place of w),
// so no cancellation amplifies round-off.
struct MaxwellResiduals {
  double r1 = 0;  // curl H - (1/c) dE/dt
  double r2 = 0;  // curl E + (1/c) dH/dt
  double r3 = 0;  // div E
  double r4 = 0;  // div H
  double scale = 0;
  double max_relative() const {
    return scale > 0 ? std::max({r1, r2, r3, r4}) / scale : 0.0;
  }
};

MaxwellResiduals maxwell_residuals(const SpectralModeSet& m, double dt_probe);

// Shared core / test hook: the same residuals on raw spectral arrays.
MaxwellResiduals maxwell_residuals_spectral(const GridSpec& spec, const SpectralVector& ehat,
                                            const SpectralVector& hhat, const SpectralVector& dehat,
                                            const SpectralVector& dhhat);

struct WaveEquationResidual {
  double value = 0;  // max-norm of (1/c^2) d2A/dt2 - Lap A
  double scale = 0;  // max-norm of Lap A
  double relative() const { return scale > 0 ? value / scale : 0.0; }
};

WaveEquationResidual wave_equation_residual(const SpectralModeSet& m, double dt_probe);

// dt such that omega_max * dt ~ 1e-5: probe truncation ~1e-11 relative while
// the analytic per-mode reduction keeps round-off flat.
double default_probe_dt(const GridSpec& spec);

// Deterministic random state: gaussian amplitudes with a decaying spectral
// envelope.
SpectralModeSet random_modes(const GridSpec& spec, std::uint64_t seed, double hbar = 1.0);

}  // namespace emlab::propagator

#pragma once

#include <optional>
#include <utility>

#include "emlab/grid.hpp"

namespace emlab::dualmaxwell {

// This module runs in the Gaussian-style units of the symmetric equations
// (explicit 4 pi source factors):
//   curl H = (1/c) dE/dt + (4 pi / c) j_e     div E = 4 pi rho_e
//   curl E = -(1/c) dH/dt + (4 pi / c) j_m    div H = 4 pi rho_m
// The propagator module uses Heaviside-Lorentz; the converters below map
// between the two (E_hl = E_g / sqrt(4 pi), rho_hl = sqrt(4 pi) rho_g).

// The sign of the magnetic-current term on the curl E line differs across
// the literature. Only the "-" choice makes the same-angle duality rotation
// of fields and sources an exact symmetry (source continuity breaks under
// "+"), so the sign is an explicit switch; "+" is the default here.
enum class MagneticCurrentSign { PlusOnCurlE, MinusOnCurlE };

inline double sign_of(MagneticCurrentSign s) {
  return s == MagneticCurrentSign::PlusOnCurlE ? 1.0 : -1.0;
}

// Collocated field pair at a common time. Spatial derivatives are the O(h^2)
// central-difference stencils; the implicit midpoint update is solved exactly
// per Fourier mode, so the one-step map is complex-linear in E + iH, which is
// what makes duality rotation commute with stepping at round-off level.
struct FieldState {
  GridSpec spec;
  VectorFieldGrid e, h;
  double t = 0;

  FieldState() = default;
  explicit FieldState(const GridSpec& s) : spec(s), e(s), h(s) {}
};

// Uniformly sampled time schedule; a single frame means static. Lookup is
// linear interpolation, clamped at the ends.
template <class FieldT>
struct Schedule {
  double t0 = 0;
  double dt = 0;
  std::vector<FieldT> frames;

  static Schedule constant(FieldT f) { return {0, 0, {std::move(f)}}; }

  bool static_in_time() const { return frames.size() <= 1 || dt == 0; }

  FieldT at(double t) const {
    require(!frames.empty(), "Schedule: empty");
    if (static_in_time()) return frames.front();
    const double s = (t - t0) / dt;
    if (s <= 0) return frames.front();
    if (s >= static_cast<double>(frames.size() - 1)) return frames.back();
    const std::size_t i = static_cast<std::size_t>(s);
    const double w = s - static_cast<double>(i);
    FieldT out = frames[i];
    for (std::size_t p = 0; p < out.values.size(); ++p)
      out.values[p] = (1.0 - w) * frames[i].values[p] + w * frames[i + 1].values[p];
    return out;
  }
};

struct SourceSet {
  std::optional<Schedule<ScalarFieldGrid>> rho_e;
  std::optional<Schedule<VectorFieldGrid>> j_e;
  std::optional<Schedule<ScalarFieldGrid>> rho_m;
  std::optional<Schedule<VectorFieldGrid>> j_m;

  bool has_electric() const { return rho_e.has_value() || j_e.has_value(); }
  bool has_magnetic() const { return rho_m.has_value() || j_m.has_value(); }
};

double cfl_limit(const GridSpec& spec);  // h / (sqrt(3) c)

// One step of the symmetric system; state must satisfy c dt <= h / sqrt(3)
// (rejected otherwise, reporting the limit). Sources are sampled at t + dt/2.
FieldState step(const FieldState& state, const SourceSet& src, double dt,
                MagneticCurrentSign sign = MagneticCurrentSign::PlusOnCurlE);

// Standard-Maxwell reference: the same code path with the magnetic source
// terms absent, for the bitwise reduction check.
FieldState step_standard(const FieldState& state, const SourceSet& src, double dt);

struct GaussResiduals {
  double re = 0;       // max |div E - 4 pi rho_e|
  double rm = 0;       // max |div H - 4 pi rho_m|
  double scale_e = 0;  // max(|div E|, |4 pi rho_e|)
  double scale_m = 0;
};

GaussResiduals gauss_residuals(const FieldState& state, const SourceSet& src);

struct ContinuityResiduals {
  double ce = 0;  // max |d rho_e/dt + div j_e|
  double cm = 0;
  double scale_e = 0;
  double scale_m = 0;
};

// Central time differences over dt on the schedules; sourced scenarios are
// expected to pass this gate before running.
ContinuityResiduals continuity_residual(const SourceSet& src, double dt);

// (E,H) -> (E cos + H sin, -E sin + H cos) with the same rotation applied to
// (rho_e, rho_m) and (j_e, j_m). When a partner schedule is absent it is
// treated as zero on the present schedule's frame times.
std::pair<FieldState, SourceSet> duality_rotate(const FieldState& state, const SourceSet& src,
                                                double angle);

struct TraceRow {
  double t = 0;
  double energy = 0;
  double re = 0, rm = 0;
  double div_e_max = 0;
};

// Magnetic-world reduction: electric sources must be identically absent/zero;
// div E is checked against 1e-12 * scale every step and a violation aborts.
std::vector<TraceRow> magnetic_world_run(FieldState state, const SourceSet& src, int steps,
                                         double dt,
                                         MagneticCurrentSign sign = MagneticCurrentSign::PlusOnCurlE);

double field_energy(const FieldState& state);  // sum (E^2 + H^2)/2 h^3

// Gauss-compatible construction helpers.
//
// Solves the central-difference Poisson problem so that div_h E = 4 pi rho
// exactly; the mean of rho is removed first (periodic neutralizing
// background). Modes in the null space of the central-difference gradient
// (pure Nyquist planes) are dropped; use band-limited charge blobs.
VectorFieldGrid coulomb_field_for(const ScalarFieldGrid& rho);

// Random band-limited field with div_h f = 0 to round-off (spectral
// projection against the central-difference wavenumber).
VectorFieldGrid divergence_free_random(const GridSpec& spec, std::uint64_t seed);

// Unit converters against the Heaviside-Lorentz modules.
inline double gaussian_field_to_hl(double v) { return v / std::sqrt(4.0 * kPi); }
inline double gaussian_charge_to_hl(double v) { return v * std::sqrt(4.0 * kPi); }
inline double hl_field_to_gaussian(double v) { return v * std::sqrt(4.0 * kPi); }
inline double hl_charge_to_gaussian(double v) { return v / std::sqrt(4.0 * kPi); }

}  // namespace emlab::dualmaxwell

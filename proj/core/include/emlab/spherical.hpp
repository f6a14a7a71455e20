#pragma once

#include <functional>

#include "emlab/common.hpp"

namespace emlab {

struct SphericalPoint {
  double r = 0, theta = 0, phi = 0;
};

// Analytic spherical components (E_r, E_theta, E_phi) as functions of
// (r, theta, phi). Partials are taken by symmetric finite differences, so the
// diagnostics never touch a Cartesian grid.
struct SphericalField {
  std::function<double(double, double, double)> e_r;
  std::function<double(double, double, double)> e_theta;
  std::function<double(double, double, double)> e_phi;
};

struct SphericalSamples {
  std::vector<SphericalPoint> points;
  std::vector<Vec3> components;  // (E_r, E_theta, E_phi) per point

  void validate() const;  // rejects r = 0 and sin(theta) = 0
};

SphericalSamples sample_field(const SphericalField& field,
                              const std::vector<SphericalPoint>& points);

// div E = (1/r^2) d(r^2 E_r)/dr + (1/(r sin t)) d(sin t E_t)/dt
//       + (1/(r sin t)) dE_p/dp, evaluated per point. The radial probe step is
// step_rel*r, the angular steps are step_rel radians (shrunk near the theta
// domain ends). Points at r = 0 or sin(theta) = 0 are rejected.
std::vector<double> spherical_divergence(const SphericalField& field,
                                         const std::vector<SphericalPoint>& points,
                                         double step_rel = 1e-4);

std::vector<double> spherical_divergence(const SphericalField& field, const SphericalSamples& s,
                                         double step_rel = 1e-4);

struct FalloffFit {
  double exponent = 0;   // slope of log|E_r| vs log r
  double amplitude = 0;  // exp(intercept)
};

// Least-squares power-law fit on (r, |E_r|) samples; a constraint-compatible
// radial field comes out with exponent -2.
FalloffFit radial_falloff_fit(const std::vector<std::pair<double, double>>& samples);

}  // namespace emlab

#include "emlab/spherical.hpp"

#include <algorithm>

namespace emlab {

void SphericalSamples::validate() const {
  require(points.size() == components.size(), "SphericalSamples: points/components mismatch");
  for (const SphericalPoint& p : points) {
    require(p.r > 0, "SphericalSamples: sample at r = 0");
    require(p.theta > 0 && p.theta < kPi, "SphericalSamples: sample at sin(theta) = 0");
  }
}

SphericalSamples sample_field(const SphericalField& field,
                              const std::vector<SphericalPoint>& points) {
  SphericalSamples s;
  s.points = points;
  s.components.reserve(points.size());
  for (const SphericalPoint& p : points)
    s.components.push_back({field.e_r(p.r, p.theta, p.phi), field.e_theta(p.r, p.theta, p.phi),
                            field.e_phi(p.r, p.theta, p.phi)});
  s.validate();
  return s;
}

std::vector<double> spherical_divergence(const SphericalField& field, const SphericalSamples& s,
                                         double step_rel) {
  s.validate();
  return spherical_divergence(field, s.points, step_rel);
}

std::vector<double> spherical_divergence(const SphericalField& field,
                                         const std::vector<SphericalPoint>& points,
                                         double step_rel) {
  require(step_rel > 0, "spherical_divergence: step must be positive");
  require(static_cast<bool>(field.e_r) && static_cast<bool>(field.e_theta) && static_cast<bool>(field.e_phi),
          "spherical_divergence: all three component functions are required");

  std::vector<double> out;
  out.reserve(points.size());
  for (const SphericalPoint& p : points) {
    require(p.r > 0, "spherical_divergence: sample at r = 0");
    require(p.theta > 0 && p.theta < kPi, "spherical_divergence: sample at sin(theta) = 0");

    const double sin_t = std::sin(p.theta);
    const double dr = step_rel * p.r;
    // keep the theta probes inside (0, pi)
    const double dth = std::min(step_rel, 0.5 * std::min(p.theta, kPi - p.theta));
    const double dph = step_rel;

    const auto r2Er = [&](double r) { return r * r * field.e_r(r, p.theta, p.phi); };
    const auto sinEt = [&](double th) { return std::sin(th) * field.e_theta(p.r, th, p.phi); };
    const auto Ep = [&](double ph) { return field.e_phi(p.r, p.theta, ph); };

    const double radial = (r2Er(p.r + dr) - r2Er(p.r - dr)) / (2.0 * dr) / (p.r * p.r);
    const double polar = (sinEt(p.theta + dth) - sinEt(p.theta - dth)) / (2.0 * dth) / (p.r * sin_t);
    const double azimuthal = (Ep(p.phi + dph) - Ep(p.phi - dph)) / (2.0 * dph) / (p.r * sin_t);
    out.push_back(radial + polar + azimuthal);
  }
  return out;
}

FalloffFit radial_falloff_fit(const std::vector<std::pair<double, double>>& samples) {
  require(samples.size() >= 3, "radial_falloff_fit: need at least 3 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(samples.size());
  for (auto [r, mag] : samples) {
    require(r > 0, "radial_falloff_fit: radius must be positive");
    require(mag > 0, "radial_falloff_fit: magnitude must be positive");
    const double x = std::log(r);
    const double y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  require(std::abs(denom) > 0, "radial_falloff_fit: radii must be distinct");
  FalloffFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.amplitude = std::exp((sy - fit.exponent * sx) / n);
  return fit;
}

}  // namespace emlab

#include "emlab/clebsch.hpp"

#include "emlab/differential.hpp"

namespace emlab::clebsch {

VectorFieldGrid synthesize(const ClebschTriple& t) {
  t.validate();
  const VectorFieldGrid grad_psi = gradient(t.psi);
  VectorFieldGrid out = gradient(t.chi);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] += t.phi.values[i] * grad_psi.values[i];
  return out;
}

double curl_identity_residual(const ClebschTriple& t) {
  const VectorFieldGrid lhs = curl(synthesize(t));
  const VectorFieldGrid grad_phi = gradient(t.phi);
  const VectorFieldGrid grad_psi = gradient(t.psi);
  double worst = 0;
  for (std::size_t i = 0; i < lhs.values.size(); ++i)
    worst = std::max(worst, norm(lhs.values[i] - cross(grad_phi.values[i], grad_psi.values[i])));
  return worst;
}

double div_formula_residual(const ClebschTriple& t) {
  const ScalarFieldGrid lhs = divergence(synthesize(t));
  const VectorFieldGrid grad_phi = gradient(t.phi);
  const VectorFieldGrid grad_psi = gradient(t.psi);
  const ScalarFieldGrid lap_psi = laplacian(t.psi);
  const ScalarFieldGrid lap_chi = laplacian(t.chi);
  double worst = 0;
  for (std::size_t i = 0; i < lhs.values.size(); ++i) {
    const double rhs = dot(grad_phi.values[i], grad_psi.values[i]) +
                       t.phi.values[i] * lap_psi.values[i] + lap_chi.values[i];
    worst = std::max(worst, std::abs(lhs.values[i] - rhs));
  }
  return worst;
}

void PotentialSet::validate() const {
  require(times.size() >= 3, "PotentialSet: need at least 3 time samples");
  require(phi.size() == times.size() && a.size() == times.size(),
          "PotentialSet: schedules must match the time axis");
  const double step = times[1] - times[0];
  require(step > 0, "PotentialSet: times must increase");
  for (std::size_t i = 1; i < times.size(); ++i)
    require(std::abs(times[i] - times[i - 1] - step) <= 1e-12 * std::max(1.0, std::abs(step)),
            "PotentialSet: times must be uniformly spaced");
  const GridSpec& g = phi.front().spec;
  for (const auto& f : phi) require(f.spec == g, "PotentialSet: grid mismatch in Phi frames");
  for (const auto& f : a) require(f.spec == g, "PotentialSet: grid mismatch in A frames");
}

SourceResiduals potential_source_residual(const PotentialSet& p, const ScalarFieldGrid& rho,
                                          const VectorFieldGrid& j, double c) {
  p.validate();
  require(c > 0, "potential_source_residual: c must be positive");
  const std::size_t m = p.mid();
  require(m >= 1 && m + 1 < p.times.size(), "potential_source_residual: mid sample needs neighbors");
  const GridSpec& g = p.phi.front().spec;
  require(rho.spec == g && j.spec == g, "potential_source_residual: source grid mismatch");

  const double dt = p.dt();
  const std::size_t count = g.size();

  // time derivatives at the middle sample
  VectorFieldGrid dot_a(g), ddot_a(g);
  ScalarFieldGrid dot_phi(g), ddot_phi(g);
  for (std::size_t i = 0; i < count; ++i) {
    dot_a.values[i] = (1.0 / (2.0 * dt)) * (p.a[m + 1].values[i] - p.a[m - 1].values[i]);
    ddot_a.values[i] = (1.0 / (dt * dt)) *
                       (p.a[m + 1].values[i] - 2.0 * p.a[m].values[i] + p.a[m - 1].values[i]);
    dot_phi.values[i] = (p.phi[m + 1].values[i] - p.phi[m - 1].values[i]) / (2.0 * dt);
    ddot_phi.values[i] =
        (p.phi[m + 1].values[i] - 2.0 * p.phi[m].values[i] + p.phi[m - 1].values[i]) / (dt * dt);
  }

  // vector equation: (4 pi / c) j = (1/c^2) d2A/dt2 - lap A + grad(div A + (1/c) dPhi/dt)
  ScalarFieldGrid gauge_term = divergence(p.a[m]);
  for (std::size_t i = 0; i < count; ++i) gauge_term.values[i] += dot_phi.values[i] / c;
  const VectorFieldGrid grad_gauge = gradient(gauge_term);

  VectorFieldGrid lap_a(g);
  {
    ScalarFieldGrid comp(g);
    for (int axis = 0; axis < 3; ++axis) {
      for (std::size_t i = 0; i < count; ++i) comp.values[i] = p.a[m].values[i][axis];
      const ScalarFieldGrid lap_comp = laplacian(comp);
      for (std::size_t i = 0; i < count; ++i) lap_a.values[i][axis] = lap_comp.values[i];
    }
  }

  // scalar equation: 4 pi rho = (1/c^2) d2Phi/dt2 - lap Phi
  //                  - (1/c)(div dA/dt + (1/c) d2Phi/dt2)
  const ScalarFieldGrid lap_phi = laplacian(p.phi[m]);
  const ScalarFieldGrid div_dot_a = divergence(dot_a);

  SourceResiduals res;
  const double inv_c2 = 1.0 / (c * c);
  for (std::size_t i = 0; i < count; ++i) {
    const Vec3 lhs_v = (4.0 * kPi / c) * j.values[i];
    const Vec3 rhs_v = inv_c2 * ddot_a.values[i] - lap_a.values[i] + grad_gauge.values[i];
    res.rv = std::max(res.rv, norm(lhs_v - rhs_v));
    res.scale_v = std::max({res.scale_v, norm(lhs_v), norm(rhs_v)});

    const double lhs_s = 4.0 * kPi * rho.values[i];
    const double rhs_s = inv_c2 * ddot_phi.values[i] - lap_phi.values[i] -
                         (div_dot_a.values[i] + ddot_phi.values[i] / c) / c;
    res.rs = std::max(res.rs, std::abs(lhs_s - rhs_s));
    res.scale_s = std::max({res.scale_s, std::abs(lhs_s), std::abs(rhs_s)});
  }
  return res;
}

FieldInvariants field_invariants(const VectorFieldGrid& e, const VectorFieldGrid& h) {
  require(e.spec == h.spec, "field_invariants: grid mismatch");
  FieldInvariants inv;
  double s = 0, p = 0;
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    s += dot(e.values[i], e.values[i]) - dot(h.values[i], h.values[i]);
    p += dot(e.values[i], h.values[i]);
  }
  inv.s = s * e.spec.cell_volume();
  inv.p = p * e.spec.cell_volume();
  return inv;
}

}  // namespace emlab::clebsch

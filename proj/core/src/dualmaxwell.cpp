#include "emlab/dualmaxwell.hpp"

#include <sstream>

#include "emlab/differential.hpp"
#include "emlab/fft.hpp"
#include "emlab/randomfields.hpp"

namespace emlab::dualmaxwell {
namespace {

Vec3 modified_wavenumber(int ix, int iy, int iz, const GridSpec& g) {
  // symbol of the central difference: D e^{ikx} = i sin(kh)/h e^{ikx}
  const Vec3 k = k_vector(ix, iy, iz, g);
  return {std::sin(k.x * g.h) / g.h, std::sin(k.y * g.h) / g.h, std::sin(k.z * g.h) / g.h};
}

SpectralVector complexify(const VectorFieldGrid& e, const VectorFieldGrid& h) {
  SpectralVector z(e.values.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = {Complex(e.values[i].x, h.values[i].x), Complex(e.values[i].y, h.values[i].y),
            Complex(e.values[i].z, h.values[i].z)};
  }
  return z;
}

}  // namespace

double cfl_limit(const GridSpec& spec) { return spec.h / (std::sqrt(3.0) * spec.c); }

FieldState step(const FieldState& state, const SourceSet& src, double dt, MagneticCurrentSign sign) {
  const GridSpec& g = state.spec;
  g.validate();
  require(state.e.spec == g && state.h.spec == g, "step: field grids must match the state spec");
  require(dt > 0 && std::isfinite(dt), "step: dt must be positive and finite");
  const double limit = cfl_limit(g);
  if (g.c * dt > g.h / std::sqrt(3.0) * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "step: CFL violation, c*dt = " << g.c * dt << " exceeds h/sqrt(3) = " << g.h / std::sqrt(3.0)
        << " (dt limit " << limit << ")";
    throw std::invalid_argument(msg.str());
  }

  // Z = E + iH obeys dZ/dt = -i c curl Z - 4 pi (j_e - i s j_m); the implicit
  // midpoint update is the Cayley transform (I - b K)^{-1} (I + b K) per mode
  // with K = [ktilde x ] and b = c dt / 2 -- real and orthogonal, so energy
  // and the discrete Gauss laws ride through exactly.
  SpectralVector z = complexify(state.e, state.h);
  fft_vector_inplace(g, z, true);

  const bool sourced = src.has_electric() || src.has_magnetic();
  SpectralVector what;
  if (sourced) {
    const double tm = state.t + 0.5 * dt;
    VectorFieldGrid je = src.j_e ? src.j_e->at(tm) : VectorFieldGrid(g);
    VectorFieldGrid jm = src.j_m ? src.j_m->at(tm) : VectorFieldGrid(g);
    require(je.spec == g && jm.spec == g, "step: source grids must match the state spec");
    const double s = sign_of(sign);
    what.resize(g.size());
    for (std::size_t i = 0; i < what.size(); ++i) {
      what[i] = {Complex(je.values[i].x, -s * jm.values[i].x),
                 Complex(je.values[i].y, -s * jm.values[i].y),
                 Complex(je.values[i].z, -s * jm.values[i].z)};
    }
    fft_vector_inplace(g, what, true);
  }

  const double b = 0.5 * g.c * dt;
  const double four_pi_dt = 4.0 * kPi * dt;
  const int n = g.n;
  parallel_for(g.size(), worker_threads(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const int iz = static_cast<int>(idx % n);
      const int iy = static_cast<int>((idx / n) % n);
      const int ix = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      const Vec3 kt = modified_wavenumber(ix, iy, iz, g);
      CVec3 rhs = z[idx] + b * cross(kt, z[idx]);
      if (sourced) rhs -= four_pi_dt * what[idx];
      // (I - b K)^{-1} v = (v + b kt x v + b^2 kt (kt.v)) / (1 + b^2 |kt|^2)
      CVec3 out = rhs + b * cross(kt, rhs);
      out += (b * b) * (dotc(kt, rhs) * to_cvec(kt));
      out *= Complex(1.0 / (1.0 + b * b * dot(kt, kt)), 0);
      z[idx] = out;
    }
  });

  fft_vector_inplace(g, z, false);
  FieldState next(g);
  for (std::size_t i = 0; i < z.size(); ++i) {
    next.e.values[i] = {z[i].x.real(), z[i].y.real(), z[i].z.real()};
    next.h.values[i] = {z[i].x.imag(), z[i].y.imag(), z[i].z.imag()};
  }
  next.t = state.t + dt;
  return next;
}

FieldState step_standard(const FieldState& state, const SourceSet& src, double dt) {
  SourceSet electric_only = src;
  electric_only.rho_m.reset();
  electric_only.j_m.reset();
  return step(state, electric_only, dt, MagneticCurrentSign::PlusOnCurlE);
}

GaussResiduals gauss_residuals(const FieldState& state, const SourceSet& src) {
  const ScalarFieldGrid div_e = divergence(state.e);
  const ScalarFieldGrid div_h = divergence(state.h);
  const ScalarFieldGrid rho_e =
      src.rho_e ? src.rho_e->at(state.t) : ScalarFieldGrid(state.spec);
  const ScalarFieldGrid rho_m =
      src.rho_m ? src.rho_m->at(state.t) : ScalarFieldGrid(state.spec);
  require(rho_e.spec == state.spec && rho_m.spec == state.spec,
          "gauss_residuals: source grids must match the state spec");

  GaussResiduals res;
  for (std::size_t i = 0; i < div_e.values.size(); ++i) {
    const double ge = 4.0 * kPi * rho_e.values[i];
    const double gm = 4.0 * kPi * rho_m.values[i];
    res.re = std::max(res.re, std::abs(div_e.values[i] - ge));
    res.rm = std::max(res.rm, std::abs(div_h.values[i] - gm));
    res.scale_e = std::max({res.scale_e, std::abs(div_e.values[i]), std::abs(ge)});
    res.scale_m = std::max({res.scale_m, std::abs(div_h.values[i]), std::abs(gm)});
  }
  return res;
}

namespace {

void continuity_of(const std::optional<Schedule<ScalarFieldGrid>>& rho,
                   const std::optional<Schedule<VectorFieldGrid>>& j, const GridSpec& g, double dt,
                   double& residual, double& scale) {
  residual = 0;
  scale = 0;
  if (!rho && !j) return;

  std::vector<double> times;
  if (rho && !rho->static_in_time()) {
    for (std::size_t i = 1; i + 1 < rho->frames.size(); ++i) times.push_back(rho->t0 + i * rho->dt);
  }
  if (times.empty()) times.push_back(rho ? rho->t0 : (j ? j->t0 : 0.0));

  for (double t : times) {
    ScalarFieldGrid drho(g);
    if (rho && !rho->static_in_time()) {
      const ScalarFieldGrid p = rho->at(t + dt);
      const ScalarFieldGrid m = rho->at(t - dt);
      for (std::size_t i = 0; i < drho.values.size(); ++i)
        drho.values[i] = (p.values[i] - m.values[i]) / (2.0 * dt);
    }
    const ScalarFieldGrid divj = j ? divergence(j->at(t)) : ScalarFieldGrid(g);
    for (std::size_t i = 0; i < drho.values.size(); ++i) {
      residual = std::max(residual, std::abs(drho.values[i] + divj.values[i]));
      scale = std::max({scale, std::abs(drho.values[i]), std::abs(divj.values[i])});
    }
  }
}

}  // namespace

ContinuityResiduals continuity_residual(const SourceSet& src, double dt) {
  require(dt > 0, "continuity_residual: dt must be positive");
  GridSpec g;
  if (src.rho_e) g = src.rho_e->frames.front().spec;
  else if (src.j_e) g = src.j_e->frames.front().spec;
  else if (src.rho_m) g = src.rho_m->frames.front().spec;
  else if (src.j_m) g = src.j_m->frames.front().spec;
  else return {};

  ContinuityResiduals res;
  continuity_of(src.rho_e, src.j_e, g, dt, res.ce, res.scale_e);
  continuity_of(src.rho_m, src.j_m, g, dt, res.cm, res.scale_m);
  return res;
}

namespace {

template <class FieldT>
std::pair<std::optional<Schedule<FieldT>>, std::optional<Schedule<FieldT>>> rotate_pair(
    const std::optional<Schedule<FieldT>>& a, const std::optional<Schedule<FieldT>>& b,
    double cs, double sn, const GridSpec& g) {
  if (!a && !b) return {std::nullopt, std::nullopt};

  const auto frame_zero = [&]() { return FieldT(g); };
  // lead with the richer time axis so no time dependence is lost
  const Schedule<FieldT>& lead =
      (a && (!b || a->frames.size() >= b->frames.size())) ? *a : *b;
  Schedule<FieldT> ra = lead, rb = lead;
  for (std::size_t fi = 0; fi < lead.frames.size(); ++fi) {
    const double t = lead.static_in_time() ? lead.t0 : lead.t0 + fi * lead.dt;
    const FieldT fa = a ? a->at(t) : frame_zero();
    const FieldT fb = b ? b->at(t) : frame_zero();
    for (std::size_t i = 0; i < fa.values.size(); ++i) {
      ra.frames[fi].values[i] = cs * fa.values[i] + sn * fb.values[i];
      rb.frames[fi].values[i] = -sn * fa.values[i] + cs * fb.values[i];
    }
  }
  return {std::move(ra), std::move(rb)};
}

}  // namespace

std::pair<FieldState, SourceSet> duality_rotate(const FieldState& state, const SourceSet& src,
                                                double angle) {
  const double cs = std::cos(angle), sn = std::sin(angle);
  FieldState out(state.spec);
  out.t = state.t;
  for (std::size_t i = 0; i < state.e.values.size(); ++i) {
    out.e.values[i] = cs * state.e.values[i] + sn * state.h.values[i];
    out.h.values[i] = -sn * state.e.values[i] + cs * state.h.values[i];
  }

  SourceSet rsrc;
  std::tie(rsrc.rho_e, rsrc.rho_m) = rotate_pair(src.rho_e, src.rho_m, cs, sn, state.spec);
  std::tie(rsrc.j_e, rsrc.j_m) = rotate_pair(src.j_e, src.j_m, cs, sn, state.spec);
  return {std::move(out), std::move(rsrc)};
}

double field_energy(const FieldState& state) {
  double acc = 0;
  for (std::size_t i = 0; i < state.e.values.size(); ++i)
    acc += dot(state.e.values[i], state.e.values[i]) + dot(state.h.values[i], state.h.values[i]);
  return 0.5 * acc * state.spec.cell_volume();
}

std::vector<TraceRow> magnetic_world_run(FieldState state, const SourceSet& src, int steps,
                                         double dt, MagneticCurrentSign sign) {
  require(steps >= 0, "magnetic_world_run: steps must be non-negative");
  const auto max_sched = [](const auto& sched) {
    double m = 0;
    if (sched)
      for (const auto& f : sched->frames) m = std::max(m, max_abs(f));
    return m;
  };
  require(max_sched(src.rho_e) == 0.0 && max_sched(src.j_e) == 0.0,
          "magnetic_world_run: electric sources must be identically zero");

  const double field_scale =
      std::max(1.0, (max_abs(state.e) + max_abs(state.h)) / state.spec.h);

  std::vector<TraceRow> trace;
  trace.reserve(static_cast<std::size_t>(steps) + 1);
  const auto record = [&](const FieldState& s) {
    TraceRow row;
    row.t = s.t;
    row.energy = field_energy(s);
    const GaussResiduals gr = gauss_residuals(s, src);
    row.re = gr.re;
    row.rm = gr.rm;
    row.div_e_max = max_abs(divergence(s.e));
    if (row.div_e_max > 1e-12 * field_scale)
      throw std::runtime_error("magnetic_world_run: div E grew above 1e-12 * scale");
    trace.push_back(row);
  };

  record(state);
  for (int i = 0; i < steps; ++i) {
    state = step(state, src, dt, sign);
    record(state);
  }
  return trace;
}

VectorFieldGrid coulomb_field_for(const ScalarFieldGrid& rho) {
  const GridSpec& g = rho.spec;
  g.validate();
  SpectralScalar rhat = spectral_of(rho);
  rhat[0] = Complex{0, 0};  // neutralizing uniform background

  SpectralVector ehat(g.size());
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t idx = g.index(ix, iy, iz);
        const Vec3 kt = modified_wavenumber(ix, iy, iz, g);
        const double kt2 = dot(kt, kt);
        if (kt2 < 1e-24) continue;  // null space of the stencil gradient
        // E = -grad phi, lap phi = -4 pi rho  =>  Ehat = -i kt 4 pi rhat / kt2
        const Complex phi = 4.0 * kPi * rhat[idx] / kt2;
        ehat[idx] = Complex(0, -1) * (phi * to_cvec(kt));
      }
  return inverse_to_vector(g, ehat);
}

VectorFieldGrid divergence_free_random(const GridSpec& spec, std::uint64_t seed) {
  VectorFieldGrid f = random_smooth_vector(spec, seed);
  SpectralVector vhat = spectral_of(f);
  for (int ix = 0; ix < spec.n; ++ix)
    for (int iy = 0; iy < spec.n; ++iy)
      for (int iz = 0; iz < spec.n; ++iz) {
        const std::size_t idx = spec.index(ix, iy, iz);
        const Vec3 kt = modified_wavenumber(ix, iy, iz, spec);
        const double kt2 = dot(kt, kt);
        if (kt2 < 1e-24) {
          if (!(ix == 0 && iy == 0 && iz == 0)) vhat[idx] = CVec3{};
          continue;
        }
        vhat[idx] -= (dotc(kt, vhat[idx]) / kt2) * to_cvec(kt);
      }
  return inverse_to_vector(spec, vhat);
}

}  // namespace emlab::dualmaxwell

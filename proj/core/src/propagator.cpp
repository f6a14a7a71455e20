#include "emlab/propagator.hpp"

#include <map>
#include <mutex>

#include "emlab/randomfields.hpp"

namespace emlab::propagator {
namespace {

Vec3 least_aligned_axis(const Vec3& n) {
  const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
  if (ax <= ay && ax <= az) return {1, 0, 0};
  if (ay <= az) return {0, 1, 0};
  return {0, 0, 1};
}

}  // namespace

PolarizationBasis::PolarizationBasis(const GridSpec& spec) : spec_(spec) {
  spec.validate();
  const int n = spec.n;
  modes_.reserve(spec.size());
  by_bucket_.assign(spec.size(), -1);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        if (ix == 0 && iy == 0 && iz == 0) continue;
        if (is_nyquist_index(ix, n) || is_nyquist_index(iy, n) || is_nyquist_index(iz, n)) continue;
        Mode m;
        m.bucket = spec.index(ix, iy, iz);
        m.partner = spec.index(spec.wrap(-ix), spec.wrap(-iy), spec.wrap(-iz));
        m.k = k_vector(ix, iy, iz, spec);
        const double kn = norm(m.k);
        m.omega = spec.c * kn;
        const Vec3 unit = (1.0 / kn) * m.k;
        const Vec3 seed = least_aligned_axis(unit);
        Vec3 e1 = seed - dot(seed, unit) * unit;
        e1 = (1.0 / norm(e1)) * e1;
        m.e1 = e1;
        m.e2 = cross(unit, e1);
        by_bucket_[m.bucket] = static_cast<std::ptrdiff_t>(modes_.size());
        modes_.push_back(m);
        max_omega_ = std::max(max_omega_, m.omega);
      }
}

std::shared_ptr<const PolarizationBasis> basis_for(const GridSpec& spec) {
  struct Key {
    int n;
    double h, c;
    bool operator<(const Key& o) const {
      return std::tie(n, h, c) < std::tie(o.n, o.h, o.c);
    }
  };
  static std::mutex mutex;
  static std::map<Key, std::weak_ptr<const PolarizationBasis>> cache;
  const Key key{spec.n, spec.h, spec.c};
  std::lock_guard<std::mutex> lock(mutex);
  if (auto found = cache[key].lock()) return found;
  auto basis = std::make_shared<const PolarizationBasis>(spec);
  cache[key] = basis;
  return basis;
}

SpectralModeSet make_mode_set(const GridSpec& spec, double hbar) {
  require(hbar > 0, "make_mode_set: hbar must be positive");
  SpectralModeSet m;
  m.basis = basis_for(spec);
  m.hbar = hbar;
  m.amps.assign(2 * m.basis->modes().size(), Complex{0, 0});
  return m;
}

namespace {

double mode_amplitude_scale(const SpectralModeSet& m, const Mode& mode) {
  const GridSpec& g = m.spec();
  return std::sqrt(m.hbar * g.c * g.c / (2.0 * mode.omega * g.volume()));
}

// Accumulates per-mode plane-wave coefficients into spectral buckets. `factor`
// multiplies the +k contribution; the -k bucket receives the conjugate, which
// keeps the synthesized field real.
template <class PerMode>
void accumulate(const SpectralModeSet& m, SpectralVector& out, PerMode&& coefficient) {
  const auto& modes = m.basis->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const CVec3 pos = coefficient(modes[i], m.amp(i, 1), m.amp(i, 2));
    out[modes[i].bucket] += pos;
    out[modes[i].partner] += conj(pos);
  }
}

CVec3 combine(const Mode& mode, const Complex& c1, const Complex& c2) {
  CVec3 v = to_cvec(mode.e1);
  v *= c1;
  CVec3 w = to_cvec(mode.e2);
  w *= c2;
  return v + w;
}

}  // namespace

SpectralModeSet expand(const VectorFieldGrid& a, const VectorFieldGrid& e_field, double hbar,
                       double tol) {
  require(a.spec == e_field.spec, "expand: grid mismatch between A and E");
  SpectralModeSet m = make_mode_set(a.spec, hbar);
  const GridSpec& g = a.spec;

  const SpectralVector ahat = spectral_of(a);
  const SpectralVector ehat = spectral_of(e_field);

  const auto check = [&](const SpectralVector& vhat, const char* which) {
    const SpectralDivergence div = spectral_divergence(g, vhat);
    require(div.max_div <= tol * std::max(div.field_scale, 1e-300),
            std::string("expand: non-transverse ") + which + " input (divergence above threshold)");
    double scale = 0, rejected = norm(vhat[0]);
    for (int ix = 0; ix < g.n; ++ix)
      for (int iy = 0; iy < g.n; ++iy)
        for (int iz = 0; iz < g.n; ++iz) {
          const double mag = norm(vhat[g.index(ix, iy, iz)]);
          scale = std::max(scale, mag);
          if (is_nyquist_index(ix, g.n) || is_nyquist_index(iy, g.n) || is_nyquist_index(iz, g.n))
            rejected = std::max(rejected, mag);
        }
    require(rejected <= tol * std::max(scale, 1e-300),
            std::string("expand: ") + which + " has mean or Nyquist content not representable in the mode basis");
  };
  check(ahat, "A");
  check(ehat, "E");

  const auto& modes = m.basis->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const Mode& mode = modes[i];
    const double gamma = mode_amplitude_scale(m, mode);
    const CVec3& ak = ahat[mode.bucket];
    const CVec3& ek = ehat[mode.bucket];
    const Complex phase_fix = Complex(0, -g.c / mode.omega);
    m.amp(i, 1) = (dotc(mode.e1, ak) + phase_fix * dotc(mode.e1, ek)) / (2.0 * gamma);
    m.amp(i, 2) = (dotc(mode.e2, ak) + phase_fix * dotc(mode.e2, ek)) / (2.0 * gamma);
  }
  return m;
}

SynthesizedFields synthesize(const SpectralModeSet& m) {
  const GridSpec& g = m.spec();
  SpectralVector ahat(g.size()), ehat(g.size()), hhat(g.size());

  accumulate(m, ahat, [&](const Mode& mode, const Complex& c1, const Complex& c2) {
    CVec3 v = combine(mode, c1, c2);
    v *= Complex(mode_amplitude_scale(m, mode), 0);
    return v;
  });
  accumulate(m, ehat, [&](const Mode& mode, const Complex& c1, const Complex& c2) {
    CVec3 v = combine(mode, c1, c2);
    v *= Complex(0, mode.omega / g.c) * mode_amplitude_scale(m, mode);
    return v;
  });
  accumulate(m, hhat, [&](const Mode& mode, const Complex& c1, const Complex& c2) {
    CVec3 v = combine(mode, c1, c2);
    v *= Complex(mode_amplitude_scale(m, mode), 0);
    return Complex(0, 1) * cross(mode.k, v);  // i k x A_k, the exact curl
  });

  SynthesizedFields out;
  double ia = 0, ie = 0, ih = 0;
  out.a = inverse_to_vector(g, ahat, &ia);
  out.e = inverse_to_vector(g, ehat, &ie);
  out.h = inverse_to_vector(g, hhat, &ih);
  out.max_imag = std::max({ia, ie, ih});
  return out;
}

SpectralModeSet evolve(const SpectralModeSet& m, double dt) {
  require(std::isfinite(dt), "evolve: dt must be finite");
  SpectralModeSet out = m;
  const auto& modes = m.basis->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const Complex phase = std::polar(1.0, -modes[i].omega * dt);
    out.amp(i, 1) *= phase;
    out.amp(i, 2) *= phase;
  }
  return out;
}

double energy(const SpectralModeSet& m) {
  const auto& modes = m.basis->modes();
  double acc = 0;
  for (std::size_t i = 0; i < modes.size(); ++i)
    acc += m.hbar * modes[i].omega * (std::norm(m.amp(i, 1)) + std::norm(m.amp(i, 2)));
  return acc;
}

double zero_point_sum(const SpectralModeSet& m) {
  double acc = 0;
  for (const Mode& mode : m.basis->modes()) acc += m.hbar * mode.omega;  // hbar w / 2 per polarization
  return acc;
}

double amplitude_norm2(const SpectralModeSet& m) {
  double acc = 0;
  for (const Complex& c : m.amps) acc += std::norm(c);
  return acc;
}

double grid_energy(const SynthesizedFields& f) {
  double acc = 0;
  for (std::size_t i = 0; i < f.e.values.size(); ++i)
    acc += dot(f.e.values[i], f.e.values[i]) + dot(f.h.values[i], f.h.values[i]);
  return 0.5 * acc * f.e.spec.cell_volume();
}

MaxwellResiduals maxwell_residuals_spectral(const GridSpec& spec, const SpectralVector& ehat,
                                            const SpectralVector& hhat, const SpectralVector& dehat,
                                            const SpectralVector& dhhat) {
  MaxwellResiduals res;
  const double inv_c = 1.0 / spec.c;
  for (int ix = 0; ix < spec.n; ++ix)
    for (int iy = 0; iy < spec.n; ++iy)
      for (int iz = 0; iz < spec.n; ++iz) {
        if (ix == 0 && iy == 0 && iz == 0) continue;
        const std::size_t idx = spec.index(ix, iy, iz);
        const Vec3 k = k_vector(ix, iy, iz, spec);
        const CVec3 curl_h = Complex(0, 1) * cross(k, hhat[idx]);
        const CVec3 curl_e = Complex(0, 1) * cross(k, ehat[idx]);
        res.r1 = std::max(res.r1, norm(curl_h - inv_c * dehat[idx]));
        res.r2 = std::max(res.r2, norm(curl_e + inv_c * dhhat[idx]));
        res.r3 = std::max(res.r3, std::abs(dotc(k, ehat[idx])));
        res.r4 = std::max(res.r4, std::abs(dotc(k, hhat[idx])));
        res.scale = std::max({res.scale, norm(curl_h), norm(curl_e)});
      }
  return res;
}

namespace {

// Per-bucket plane-wave coefficients of A, E, H assembled from the owning
// mode and its conjugate partner. Residuals at -k are complex conjugates of
// those at +k, so callers walk only the bucket < partner half.
struct BucketFields {
  CVec3 a, e, h;
  double omega = 0;
  Vec3 k;
};

BucketFields bucket_fields(const SpectralModeSet& m, std::size_t mode_index) {
  const Mode& mode = m.basis->modes()[mode_index];
  const std::ptrdiff_t partner_index = m.basis->mode_at(mode.partner);
  const Mode& partner = m.basis->modes()[partner_index];

  const double gamma = mode_amplitude_scale(m, mode);
  const CVec3 own = combine(mode, m.amp(mode_index, 1), m.amp(mode_index, 2));
  const CVec3 conj_side = conj(combine(partner, m.amp(partner_index, 1), m.amp(partner_index, 2)));

  BucketFields f;
  f.k = mode.k;
  f.omega = mode.omega;
  // A(k) = gamma (own + conj(partner)); E = i w/c gamma (own - conj(partner));
  // H = i k x A per piece (the conjugate of the partner's -k x flips sign)
  f.a = Complex(gamma, 0) * (own + conj_side);
  const GridSpec& g = m.spec();
  f.e = Complex(0, mode.omega / g.c) * (Complex(gamma, 0) * (own - conj_side));
  f.h = Complex(0, 1) * cross(mode.k, f.a);
  return f;
}

}  // namespace

MaxwellResiduals maxwell_residuals(const SpectralModeSet& m, double dt_probe) {
  require(dt_probe > 0, "maxwell_residuals: dt_probe must be positive");
  const GridSpec& g = m.spec();
  MaxwellResiduals res;
  const double inv_c = 1.0 / g.c;
  const auto& modes = m.basis->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].bucket > modes[i].partner) continue;  // conjugate half
    const BucketFields f = bucket_fields(m, i);
    // Central difference of the exact evolution over +-dt acts per piece as
    // -+ i sin(w dt)/dt, which swaps the (own - conj) and (own + conj)
    // combinations:
    //   dE(k)/dt = rate (w/c) A(k),  dH(k)/dt = -i rate (c/w) k x E(k),
    // with rate = sin(w dt)/dt (-> w as dt -> 0).
    const double rate = std::sin(f.omega * dt_probe) / dt_probe;
    const CVec3 de = Complex(rate * f.omega / g.c, 0) * f.a;
    const CVec3 dh = Complex(0, -rate * g.c / f.omega) * cross(f.k, f.e);
    const CVec3 curl_h = Complex(0, 1) * cross(f.k, f.h);
    const CVec3 curl_e = Complex(0, 1) * cross(f.k, f.e);
    res.r1 = std::max(res.r1, norm(curl_h - inv_c * de));
    res.r2 = std::max(res.r2, norm(curl_e + inv_c * dh));
    res.r3 = std::max(res.r3, std::abs(dotc(f.k, f.e)));
    res.r4 = std::max(res.r4, std::abs(dotc(f.k, f.h)));
    res.scale = std::max({res.scale, norm(curl_h), norm(curl_e)});
  }
  return res;
}

WaveEquationResidual wave_equation_residual(const SpectralModeSet& m, double dt_probe) {
  require(dt_probe > 0, "wave_equation_residual: dt_probe must be positive");
  const GridSpec& g = m.spec();
  WaveEquationResidual res;
  const double inv_c2 = 1.0 / (g.c * g.c);
  const auto& modes = m.basis->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].bucket > modes[i].partner) continue;
    const BucketFields f = bucket_fields(m, i);
    const double k2 = dot(f.k, f.k);
    // (e^{-iw dt} - 2 + e^{+iw dt}) / dt^2 = -4 sin^2(w dt/2)/dt^2 on both pieces
    const double s = std::sin(0.5 * f.omega * dt_probe);
    const double second = -4.0 * s * s / (dt_probe * dt_probe);
    CVec3 r = (inv_c2 * second) * f.a;
    r += k2 * f.a;
    res.value = std::max(res.value, norm(r));
    res.scale = std::max(res.scale, k2 * norm(f.a));
  }
  return res;
}

double default_probe_dt(const GridSpec& spec) {
  const auto basis = basis_for(spec);
  return 1e-5 / basis->max_omega();
}

SpectralModeSet random_modes(const GridSpec& spec, std::uint64_t seed, double hbar) {
  SpectralModeSet m = make_mode_set(spec, hbar);
  GaussianStream gs(seed);
  const double m0 = std::max(1.0, spec.n / 6.0);
  const double k0 = 2.0 * kPi * m0 / spec.length();
  const auto& modes = m.basis->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const double k = norm(modes[i].k);
    const double env = std::exp(-k * k / (2.0 * k0 * k0));
    m.amp(i, 1) = env * Complex(gs.next(), gs.next());
    m.amp(i, 2) = env * Complex(gs.next(), gs.next());
  }
  return m;
}

}  // namespace emlab::propagator

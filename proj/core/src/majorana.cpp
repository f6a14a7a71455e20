#include "emlab/majorana.hpp"

namespace emlab::majorana {
namespace {

int levi_civita(int i, int k, int l) {
  if (i == k || k == l || i == l) return 0;
  return ((k - i + 3) % 3 == 1) ? 1 : -1;  // cyclic of (i,k,l)
}

// Rodrigues rotation of a complex vector about the real unit axis.
CVec3 rotate(const Vec3& unit, double angle, const CVec3& v) {
  const double cs = std::cos(angle), sn = std::sin(angle);
  const CVec3 nxv = cross(unit, v);
  const Complex ndotv = dotc(unit, v);
  CVec3 out = cs * v;
  out += sn * nxv;
  out += ((1.0 - cs) * ndotv) * to_cvec(unit);
  return out;
}

}  // namespace

SpinMatrices spin_matrices() {
  SpinMatrices s;
  Eigen::Matrix3cd* mats[3] = {&s.sx, &s.sy, &s.sz};
  for (int i = 0; i < 3; ++i) {
    mats[i]->setZero();
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) (*mats[i])(k, l) = Complex(0, -levi_civita(i, k, l));
  }
  return s;
}

Eigen::Matrix3cd spin_casimir() {
  const SpinMatrices s = spin_matrices();
  return s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
}

Eigen::Matrix2cd pauli(int axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 2: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: axis must be 0..2");
  }
  return m;
}

Eigen::Matrix2cd pauli_casimir() {
  Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 3; ++i) {
    const Eigen::Matrix2cd half = 0.5 * pauli(i);
    acc += half * half;
  }
  return acc;
}

RSField to_rs(const VectorFieldGrid& e, const VectorFieldGrid& h) {
  require(e.spec == h.spec, "to_rs: grid mismatch");
  RSField r(e.spec);
  for (std::size_t i = 0; i < r.f.size(); ++i) {
    const Vec3& ev = e.values[i];
    const Vec3& hv = h.values[i];
    r.f[i] = {Complex(ev.x, hv.x), Complex(ev.y, hv.y), Complex(ev.z, hv.z)};
    r.g[i] = {Complex(ev.x, -hv.x), Complex(ev.y, -hv.y), Complex(ev.z, -hv.z)};
  }
  return r;
}

RealFields from_rs(const RSField& r) {
  RealFields out;
  out.e = VectorFieldGrid(r.spec);
  out.h = VectorFieldGrid(r.spec);
  double mi = 0;
  for (std::size_t i = 0; i < r.f.size(); ++i) {
    const CVec3 esum = 0.5 * (r.f[i] + r.g[i]);
    const CVec3 hdiff = Complex(0, -0.5) * (r.f[i] - r.g[i]);
    out.e.values[i] = {esum.x.real(), esum.y.real(), esum.z.real()};
    out.h.values[i] = {hdiff.x.real(), hdiff.y.real(), hdiff.z.real()};
    for (int ax = 0; ax < 3; ++ax)
      mi = std::max({mi, std::abs(esum[ax].imag()), std::abs(hdiff[ax].imag())});
  }
  out.max_imag = mi;
  return out;
}

double transversality_residual(const RSField& r) {
  SpectralVector fhat = r.f;
  SpectralVector ghat = r.g;
  fft_vector_inplace(r.spec, fhat, true);
  fft_vector_inplace(r.spec, ghat, true);
  const SpectralDivergence df = spectral_divergence(r.spec, fhat);
  const SpectralDivergence dg = spectral_divergence(r.spec, ghat);
  const double scale = std::max(df.field_scale, dg.field_scale);
  return scale > 0 ? std::max(df.max_div, dg.max_div) / scale : 0.0;
}

RSField evolve_rs(const RSField& r, double dt, double transversality_tol) {
  require(std::isfinite(dt), "evolve_rs: dt must be finite");
  const double tr = transversality_residual(r);
  require(tr <= transversality_tol, "evolve_rs: non-transverse input (k.F above threshold)");

  const GridSpec& g = r.spec;
  SpectralVector fhat = r.f;
  SpectralVector ghat = r.g;
  fft_vector_inplace(g, fhat, true);
  fft_vector_inplace(g, ghat, true);

  const int n = g.n;
  parallel_for(g.size(), worker_threads(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      if (idx == 0) continue;
      const int iz = static_cast<int>(idx % n);
      const int iy = static_cast<int>((idx / n) % n);
      const int ix = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      const Vec3 k = k_vector(ix, iy, iz, g);
      const double kn = norm(k);
      const Vec3 unit = (1.0 / kn) * k;
      const double angle = g.c * kn * dt;
      fhat[idx] = rotate(unit, angle, fhat[idx]);
      ghat[idx] = rotate(unit, -angle, ghat[idx]);
    }
  });

  RSField out(g);
  fft_vector_inplace(g, fhat, false);
  fft_vector_inplace(g, ghat, false);
  out.f = std::move(fhat);
  out.g = std::move(ghat);
  return out;
}

RSField lorentz_infinitesimal(const RSField& r, const Vec3& dtheta, const Vec3& dv,
                              double prefactor) {
  // (s.a) v = i (a x v), so the map reduces to real cross products:
  //   F -> F - prefactor (dtheta x F) - (i/c)(dv x F)
  // and the conjugate matrix on G flips the boost term's sign.
  RSField out(r.spec);
  const double inv_c = 1.0 / r.spec.c;
  for (std::size_t i = 0; i < r.f.size(); ++i) {
    CVec3 fv = r.f[i];
    fv -= prefactor * cross(dtheta, r.f[i]);
    fv -= Complex(0, inv_c) * cross(dv, r.f[i]);
    out.f[i] = fv;
    CVec3 gv = r.g[i];
    gv -= prefactor * cross(dtheta, r.g[i]);
    gv += Complex(0, inv_c) * cross(dv, r.g[i]);
    out.g[i] = gv;
  }
  return out;
}

Eigen::Vector2cd bispinor_lorentz_infinitesimal(const Eigen::Vector2cd& xi, const Vec3& dtheta,
                                                const Vec3& dv, double prefactor, double c) {
  require(c > 0, "bispinor_lorentz_infinitesimal: c must be positive");
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (int ax = 0; ax < 3; ++ax) {
    m += Complex(0, 0.5 * prefactor * dtheta[ax]) * pauli(ax);
    m -= (dv[ax] / (2.0 * c)) * pauli(ax);
  }
  return m * xi;
}

}  // namespace emlab::majorana

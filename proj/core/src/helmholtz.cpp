#include "emlab/helmholtz.hpp"

namespace emlab {

HelmholtzParts helmholtz_split(const VectorFieldGrid& f) {
  const GridSpec& g = f.spec;
  g.validate();
  SpectralVector vhat = spectral_of(f);
  SpectralVector lhat(vhat.size());

  HelmholtzParts parts;
  const CVec3& dc = vhat[0];
  parts.dc = {dc.x.real(), dc.y.real(), dc.z.real()};

  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t idx = g.index(ix, iy, iz);
        if (ix == 0 && iy == 0 && iz == 0) {
          vhat[idx] = CVec3{};
          continue;
        }
        const Vec3 k = k_vector(ix, iy, iz, g);
        const double k2 = dot(k, k);
        const Complex kv = dotc(k, vhat[idx]);
        const CVec3 longit = (kv / k2) * to_cvec(k);
        lhat[idx] = longit;
        vhat[idx] -= longit;
      }

  parts.transverse = inverse_to_vector(g, vhat);
  parts.longitudinal = inverse_to_vector(g, lhat);
  return parts;
}

VectorFieldGrid project_transverse(const VectorFieldGrid& f, bool keep_dc) {
  HelmholtzParts parts = helmholtz_split(f);
  VectorFieldGrid out = std::move(parts.transverse);
  if (keep_dc) {
    for (Vec3& v : out.values) v += parts.dc;
  }
  return out;
}

double relative_spectral_divergence(const VectorFieldGrid& f) {
  return spectral_divergence(f.spec, spectral_of(f)).relative();
}

}  // namespace emlab

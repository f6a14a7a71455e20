#include "emlab/differential.hpp"

namespace emlab {
namespace {

struct Shift {
  const GridSpec& spec;
  int ix, iy, iz;

  std::size_t operator()(int dx, int dy, int dz) const {
    return spec.index(spec.wrap(ix + dx), spec.wrap(iy + dy), spec.wrap(iz + dz));
  }
};

}  // namespace

ScalarFieldGrid divergence(const VectorFieldGrid& f) {
  const GridSpec& g = f.spec;
  g.validate();
  ScalarFieldGrid out(g);
  const double inv2h = 1.0 / (2.0 * g.h);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        Shift s{g, ix, iy, iz};
        const auto& v = f.values;
        out.at(ix, iy, iz) = inv2h * ((v[s(1, 0, 0)].x - v[s(-1, 0, 0)].x) +
                                      (v[s(0, 1, 0)].y - v[s(0, -1, 0)].y) +
                                      (v[s(0, 0, 1)].z - v[s(0, 0, -1)].z));
      }
  return out;
}

VectorFieldGrid curl(const VectorFieldGrid& f) {
  const GridSpec& g = f.spec;
  g.validate();
  VectorFieldGrid out(g);
  const double inv2h = 1.0 / (2.0 * g.h);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        Shift s{g, ix, iy, iz};
        const auto& v = f.values;
        const double dyz = v[s(0, 1, 0)].z - v[s(0, -1, 0)].z;
        const double dzy = v[s(0, 0, 1)].y - v[s(0, 0, -1)].y;
        const double dzx = v[s(0, 0, 1)].x - v[s(0, 0, -1)].x;
        const double dxz = v[s(1, 0, 0)].z - v[s(-1, 0, 0)].z;
        const double dxy = v[s(1, 0, 0)].y - v[s(-1, 0, 0)].y;
        const double dyx = v[s(0, 1, 0)].x - v[s(0, -1, 0)].x;
        out.at(ix, iy, iz) = {inv2h * (dyz - dzy), inv2h * (dzx - dxz), inv2h * (dxy - dyx)};
      }
  return out;
}

VectorFieldGrid gradient(const ScalarFieldGrid& f) {
  const GridSpec& g = f.spec;
  g.validate();
  VectorFieldGrid out(g);
  const double inv2h = 1.0 / (2.0 * g.h);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        Shift s{g, ix, iy, iz};
        const auto& v = f.values;
        out.at(ix, iy, iz) = {inv2h * (v[s(1, 0, 0)] - v[s(-1, 0, 0)]),
                              inv2h * (v[s(0, 1, 0)] - v[s(0, -1, 0)]),
                              inv2h * (v[s(0, 0, 1)] - v[s(0, 0, -1)])};
      }
  return out;
}

ScalarFieldGrid laplacian(const ScalarFieldGrid& f) {
  const GridSpec& g = f.spec;
  g.validate();
  ScalarFieldGrid out(g);
  const double invh2 = 1.0 / (g.h * g.h);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        Shift s{g, ix, iy, iz};
        const auto& v = f.values;
        const double center = v[s(0, 0, 0)];
        out.at(ix, iy, iz) = invh2 * (v[s(1, 0, 0)] + v[s(-1, 0, 0)] + v[s(0, 1, 0)] +
                                      v[s(0, -1, 0)] + v[s(0, 0, 1)] + v[s(0, 0, -1)] - 6.0 * center);
      }
  return out;
}

VectorFieldGrid gauge_transform(const VectorFieldGrid& a, const ScalarFieldGrid& psi) {
  require(a.spec == psi.spec, "gauge_transform: grid mismatch");
  VectorFieldGrid grad = gradient(psi);
  VectorFieldGrid out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += grad.values[i];
  return out;
}

}  // namespace emlab

#pragma once

#include <algorithm>
#include <cstddef>

#include "emlab/common.hpp"

namespace emlab {

// Periodic cubic lattice, n points per axis with spacing h. Heaviside-Lorentz
// units with configurable speed of light (default 1).
struct GridSpec {
  int n = 0;
  double h = 0;
  double c = 1.0;

  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  double length() const { return n * h; }
  double volume() const { double l = length(); return l * l * l; }
  double cell_volume() const { return h * h * h; }

  void validate() const {
    require(n >= 4, "GridSpec: n must be >= 4");
    require(h > 0, "GridSpec: h must be positive");
    require(c > 0, "GridSpec: c must be positive");
  }

  bool operator==(const GridSpec& o) const { return n == o.n && h == o.h && c == o.c; }

  // Row-major site index, z fastest.
  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n + iy) * n + iz;
  }
  int wrap(int i) const {
    i %= n;
    return i < 0 ? i + n : i;
  }
  Vec3 point(int ix, int iy, int iz) const { return {ix * h, iy * h, iz * h}; }
};

struct ScalarFieldGrid {
  GridSpec spec;
  std::vector<double> values;

  ScalarFieldGrid() = default;
  explicit ScalarFieldGrid(const GridSpec& s) : spec(s), values(s.size(), 0.0) { s.validate(); }

  double& at(int ix, int iy, int iz) { return values[spec.index(ix, iy, iz)]; }
  double at(int ix, int iy, int iz) const { return values[spec.index(ix, iy, iz)]; }
};

struct VectorFieldGrid {
  GridSpec spec;
  std::vector<Vec3> values;

  VectorFieldGrid() = default;
  explicit VectorFieldGrid(const GridSpec& s) : spec(s), values(s.size()) { s.validate(); }

  Vec3& at(int ix, int iy, int iz) { return values[spec.index(ix, iy, iz)]; }
  const Vec3& at(int ix, int iy, int iz) const { return values[spec.index(ix, iy, iz)]; }
};

template <class F>
ScalarFieldGrid make_scalar_field(const GridSpec& spec, F&& f) {
  ScalarFieldGrid out(spec);
  for (int ix = 0; ix < spec.n; ++ix)
    for (int iy = 0; iy < spec.n; ++iy)
      for (int iz = 0; iz < spec.n; ++iz) out.at(ix, iy, iz) = f(spec.point(ix, iy, iz));
  return out;
}

template <class F>
VectorFieldGrid make_vector_field(const GridSpec& spec, F&& f) {
  VectorFieldGrid out(spec);
  for (int ix = 0; ix < spec.n; ++ix)
    for (int iy = 0; iy < spec.n; ++iy)
      for (int iz = 0; iz < spec.n; ++iz) out.at(ix, iy, iz) = f(spec.point(ix, iy, iz));
  return out;
}

inline double max_abs(const ScalarFieldGrid& f) {
  double m = 0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs(const VectorFieldGrid& f) {
  double m = 0;
  for (const Vec3& v : f.values) m = std::max(m, norm(v));
  return m;
}

inline double l2_norm(const VectorFieldGrid& f) {
  double s = 0;
  for (const Vec3& v : f.values) s += dot(v, v);
  return std::sqrt(s * f.spec.cell_volume());
}

inline double l2_norm(const ScalarFieldGrid& f) {
  double s = 0;
  for (double v : f.values) s += v * v;
  return std::sqrt(s * f.spec.cell_volume());
}

// L2 inner product with the cell-volume measure.
inline double inner(const VectorFieldGrid& a, const VectorFieldGrid& b) {
  require(a.spec == b.spec, "inner: grid mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += dot(a.values[i], b.values[i]);
  return s * a.spec.cell_volume();
}

inline VectorFieldGrid operator+(const VectorFieldGrid& a, const VectorFieldGrid& b) {
  require(a.spec == b.spec, "field sum: grid mismatch");
  VectorFieldGrid out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

inline VectorFieldGrid operator-(const VectorFieldGrid& a, const VectorFieldGrid& b) {
  require(a.spec == b.spec, "field difference: grid mismatch");
  VectorFieldGrid out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

inline double max_abs_diff(const VectorFieldGrid& a, const VectorFieldGrid& b) {
  require(a.spec == b.spec, "max_abs_diff: grid mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, norm(a.values[i] - b.values[i]));
  return m;
}

}  // namespace emlab

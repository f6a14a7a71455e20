#include "emlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace emlab {
namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// FFTW planning is not thread-safe; executing a cached plan on new arrays is.
std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const std::size_t count = static_cast<std::size_t>(n) * n * n;
  std::vector<Complex> scratch(count);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair p;
  // FFTW_UNALIGNED keeps the plans valid for whatever buffers callers pass in.
  p.fwd = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

}  // namespace

void fft3(std::vector<Complex>& data, int n, bool forward) {
  const std::size_t count = static_cast<std::size_t>(n) * n * n;
  require(data.size() == count, "fft3: data size does not match n^3");
  PlanPair& p = plans_for(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(forward ? p.fwd : p.bwd, ptr, ptr);
  if (forward) {
    const double scale = 1.0 / static_cast<double>(count);
    for (auto& v : data) v *= scale;
  }
}

SpectralScalar spectral_of(const ScalarFieldGrid& f) {
  SpectralScalar out(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) out[i] = Complex(f.values[i], 0.0);
  fft3(out, f.spec.n, true);
  return out;
}

SpectralVector spectral_of(const VectorFieldGrid& f) {
  const std::size_t count = f.values.size();
  SpectralVector out(count);
  std::vector<Complex> comp(count);
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < count; ++i) comp[i] = Complex(f.values[i][axis], 0.0);
    fft3(comp, f.spec.n, true);
    for (std::size_t i = 0; i < count; ++i) out[i][axis] = comp[i];
  }
  return out;
}

ScalarFieldGrid inverse_to_scalar(const GridSpec& spec, const SpectralScalar& shat, double* max_imag) {
  require(shat.size() == spec.size(), "inverse_to_scalar: size mismatch");
  std::vector<Complex> work = shat;
  fft3(work, spec.n, false);
  ScalarFieldGrid out(spec);
  double mi = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    out.values[i] = work[i].real();
    mi = std::max(mi, std::abs(work[i].imag()));
  }
  if (max_imag) *max_imag = mi;
  return out;
}

VectorFieldGrid inverse_to_vector(const GridSpec& spec, const SpectralVector& vhat, double* max_imag) {
  require(vhat.size() == spec.size(), "inverse_to_vector: size mismatch");
  VectorFieldGrid out(spec);
  std::vector<Complex> comp(vhat.size());
  double mi = 0;
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < vhat.size(); ++i) comp[i] = vhat[i][axis];
    fft3(comp, spec.n, false);
    for (std::size_t i = 0; i < vhat.size(); ++i) {
      out.values[i][axis] = comp[i].real();
      mi = std::max(mi, std::abs(comp[i].imag()));
    }
  }
  if (max_imag) *max_imag = mi;
  return out;
}

void fft_vector_inplace(const GridSpec& spec, SpectralVector& data, bool forward) {
  require(data.size() == spec.size(), "fft_vector_inplace: size mismatch");
  std::vector<Complex> comp(data.size());
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < data.size(); ++i) comp[i] = data[i][axis];
    fft3(comp, spec.n, forward);
    for (std::size_t i = 0; i < data.size(); ++i) data[i][axis] = comp[i];
  }
}

namespace {

bool in_band(int ix, int iy, int iz, int n, int max_mode) {
  return std::abs(mode_number(ix, n)) <= max_mode && std::abs(mode_number(iy, n)) <= max_mode &&
         std::abs(mode_number(iz, n)) <= max_mode;
}

}  // namespace

ScalarFieldGrid low_pass(const ScalarFieldGrid& f, int max_mode) {
  require(max_mode >= 1, "low_pass: max_mode must be >= 1");
  SpectralScalar shat = spectral_of(f);
  const GridSpec& g = f.spec;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz)
        if (!in_band(ix, iy, iz, g.n, max_mode)) shat[g.index(ix, iy, iz)] = Complex{0, 0};
  return inverse_to_scalar(g, shat);
}

VectorFieldGrid low_pass(const VectorFieldGrid& f, int max_mode) {
  require(max_mode >= 1, "low_pass: max_mode must be >= 1");
  SpectralVector vhat = spectral_of(f);
  const GridSpec& g = f.spec;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz)
        if (!in_band(ix, iy, iz, g.n, max_mode)) vhat[g.index(ix, iy, iz)] = CVec3{};
  return inverse_to_vector(g, vhat);
}

SpectralDivergence spectral_divergence(const GridSpec& spec, const SpectralVector& vhat) {
  SpectralDivergence res;
  for (int ix = 0; ix < spec.n; ++ix)
    for (int iy = 0; iy < spec.n; ++iy)
      for (int iz = 0; iz < spec.n; ++iz) {
        if (ix == 0 && iy == 0 && iz == 0) continue;
        const Vec3 k = k_vector(ix, iy, iz, spec);
        const CVec3& v = vhat[spec.index(ix, iy, iz)];
        res.max_div = std::max(res.max_div, std::abs(dotc(k, v)));
        res.field_scale = std::max(res.field_scale, norm(k) * norm(v));
      }
  return res;
}

}  // namespace emlab

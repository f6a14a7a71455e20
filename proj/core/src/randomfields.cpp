#include "emlab/randomfields.hpp"
#include <tuple>

#include "emlab/fft.hpp"
#include "emlab/helmholtz.hpp"

namespace emlab {
namespace {

int default_band(const GridSpec& spec, int max_mode) {
  if (max_mode > 0) return max_mode;
  return std::max(1, spec.n / 3);
}

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Amplitudes are keyed by (seed, mode numbers), not by lattice order, so the
// same seed and band describe the same continuum function on every grid
// resolution -- what convergence sweeps need.
Complex mode_amplitude(std::uint64_t seed, int mx, int my, int mz) {
  std::uint64_t key = mix(seed ^ mix(static_cast<std::uint64_t>(mx + 512)));
  key = mix(key ^ mix(static_cast<std::uint64_t>(my + 512) << 20));
  key = mix(key ^ mix(static_cast<std::uint64_t>(mz + 512) << 40));
  GaussianStream gs(key);
  return {gs.next(), gs.next()};
}

// Decaying gaussian amplitudes on a band-limited mode set, conjugate-paired
// so the field comes out real. The band limit keeps Nyquist planes empty.
SpectralScalar random_spectrum(const GridSpec& spec, std::uint64_t seed, int band) {
  SpectralScalar shat(spec.size(), Complex{0, 0});
  const double m0 = 0.6 * band;
  for (int ix = 0; ix < spec.n; ++ix)
    for (int iy = 0; iy < spec.n; ++iy)
      for (int iz = 0; iz < spec.n; ++iz) {
        const int mx = mode_number(ix, spec.n), my = mode_number(iy, spec.n), mz = mode_number(iz, spec.n);
        if (ix == 0 && iy == 0 && iz == 0) continue;
        if (std::abs(mx) > band || std::abs(my) > band || std::abs(mz) > band) continue;
        const double m2 = double(mx) * mx + double(my) * my + double(mz) * mz;
        const double env = std::exp(-m2 / (2.0 * m0 * m0));
        // conjugate pairing: draw once per +-m pair, keyed on the lexicographic leader
        const bool leader = std::make_tuple(mx, my, mz) > std::make_tuple(-mx, -my, -mz);
        const Complex amp = leader ? mode_amplitude(seed, mx, my, mz)
                                   : std::conj(mode_amplitude(seed, -mx, -my, -mz));
        shat[spec.index(ix, iy, iz)] = env * amp;
      }
  // unit RMS, computed in mode space so it is grid-resolution independent
  double power = 0;
  for (const Complex& v : shat) power += std::norm(v);
  if (power > 0) {
    const double scale = 1.0 / std::sqrt(power);
    for (Complex& v : shat) v *= scale;
  }
  return shat;
}

}  // namespace

ScalarFieldGrid random_smooth_scalar(const GridSpec& spec, std::uint64_t seed, int max_mode) {
  spec.validate();
  const int band = default_band(spec, max_mode);
  return inverse_to_scalar(spec, random_spectrum(spec, seed, band));
}

VectorFieldGrid random_smooth_vector(const GridSpec& spec, std::uint64_t seed, int max_mode) {
  spec.validate();
  const int band = default_band(spec, max_mode);
  VectorFieldGrid out(spec);
  for (int axis = 0; axis < 3; ++axis) {
    const std::uint64_t comp_seed = mix(seed + 0x51ed2701u * (axis + 1));
    ScalarFieldGrid comp = inverse_to_scalar(spec, random_spectrum(spec, comp_seed, band));
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i][axis] = comp.values[i];
  }
  return out;
}

VectorFieldGrid random_transverse_field(const GridSpec& spec, std::uint64_t seed, int max_mode) {
  return project_transverse(random_smooth_vector(spec, seed, max_mode), /*keep_dc=*/false);
}

}  // namespace emlab

#pragma once

#include <random>

#include "emlab/grid.hpp"

namespace emlab {

// Deterministic gaussian stream: Box-Muller over mt19937_64 so the byte
// output does not depend on the standard library's distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * kPi * u2);
  }

  double uniform() {  // in [0, 1)
    return (eng_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0;
  bool have_spare_ = false;
};

// Band-limited random fields: independent gaussian Fourier amplitudes with a
// gaussian spectral envelope, zero beyond mode number max_mode (default n/3,
// which keeps them Nyquist-free and "smooth" in the spectral sense).
ScalarFieldGrid random_smooth_scalar(const GridSpec& spec, std::uint64_t seed, int max_mode = 0);
VectorFieldGrid random_smooth_vector(const GridSpec& spec, std::uint64_t seed, int max_mode = 0);

// Transverse, zero-mean, band-limited vector field.
VectorFieldGrid random_transverse_field(const GridSpec& spec, std::uint64_t seed, int max_mode = 0);

}  // namespace emlab

#pragma once

#include "emlab/grid.hpp"

namespace emlab {

// In-place 3D complex DFT on an n*n*n array (site index z-fastest, matching
// GridSpec::index). The forward transform carries the 1/n^3 normalization, so
// forward coefficients are plane-wave amplitudes: f(x) = sum_k fhat(k) e^{ik.x}.
void fft3(std::vector<Complex>& data, int n, bool forward);

// Integer mode number for axis index: m in [-n/2, n/2).
inline int mode_number(int idx, int n) { return idx <= (n - 1) / 2 ? idx : idx - n; }

// For even n the m = -n/2 mode has no conjugate partner on the lattice.
inline bool is_nyquist_index(int idx, int n) { return n % 2 == 0 && idx == n / 2; }

inline double k_component(int idx, const GridSpec& spec) {
  return 2.0 * kPi * mode_number(idx, spec.n) / spec.length();
}

inline Vec3 k_vector(int ix, int iy, int iz, const GridSpec& spec) {
  return {k_component(ix, spec), k_component(iy, spec), k_component(iz, spec)};
}

using SpectralScalar = std::vector<Complex>;
using SpectralVector = std::vector<CVec3>;

SpectralScalar spectral_of(const ScalarFieldGrid& f);
SpectralVector spectral_of(const VectorFieldGrid& f);

// Inverse transforms back to a real-valued grid; if max_imag is non-null the
// largest imaginary residue encountered is reported there.
ScalarFieldGrid inverse_to_scalar(const GridSpec& spec, const SpectralScalar& shat, double* max_imag = nullptr);
VectorFieldGrid inverse_to_vector(const GridSpec& spec, const SpectralVector& vhat, double* max_imag = nullptr);

// Transforms of genuinely complex 3-vector fields (bivector machinery).
void fft_vector_inplace(const GridSpec& spec, SpectralVector& data, bool forward);

// Spectral low-pass: zero every mode with any |m| above max_mode. Useful for
// making sampled profiles exactly band-limited (no Nyquist or seam content).
ScalarFieldGrid low_pass(const ScalarFieldGrid& f, int max_mode);
VectorFieldGrid low_pass(const VectorFieldGrid& f, int max_mode);

// Largest |khat . vhat(k)| over k != 0, and the matching field scale
// max |k| |vhat(k)|; used for relative transversality diagnostics.
struct SpectralDivergence {
  double max_div = 0;     // max over k of |k . vhat|
  double field_scale = 0; // max over k of |k| |vhat|
  double relative() const { return field_scale > 0 ? max_div / field_scale : 0.0; }
};
SpectralDivergence spectral_divergence(const GridSpec& spec, const SpectralVector& vhat);

}  // namespace emlab

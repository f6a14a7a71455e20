#pragma once

#include <Eigen/Dense>

#include "emlab/fft.hpp"

namespace emlab::majorana {

// Photon spin matrices (s_i)_{kl} = -i e_{ikl}; Hermitian, [s_i, s_k] =
// i e_{ikl} s_l, sum s_i^2 = 2 I. Acting on a vector, (s.a) v = i (a x v).
struct SpinMatrices {
  Eigen::Matrix3cd sx, sy, sz;
};

SpinMatrices spin_matrices();
Eigen::Matrix3cd spin_casimir();            // sum s_i^2
Eigen::Matrix2cd pauli(int axis);           // sigma_x, sigma_y, sigma_z for axis 0..2
Eigen::Matrix2cd pauli_casimir();           // sum (sigma_i/2)^2 = (3/4) I

// Bivector pair F = E + iH, G = E - iH on the lattice.
struct RSField {
  GridSpec spec;
  std::vector<CVec3> f, g;

  RSField() = default;
  explicit RSField(const GridSpec& s) : spec(s), f(s.size()), g(s.size()) { s.validate(); }
};

RSField to_rs(const VectorFieldGrid& e, const VectorFieldGrid& h);

struct RealFields {
  VectorFieldGrid e, h;
  double max_imag = 0;  // residue of (F+G)/2 and (F-G)/(2i) off the real axis
};

RealFields from_rs(const RSField& r);

// First-order bivector evolution, integrated exactly per Fourier mode: the
// generator acts as a real rotation about n = k/|k| by omega dt, with the
// opposite sense on G. Sign convention is the one fixed by equivalence with
// the real-field Maxwell system (the momentum reading of the gradient symbol,
// with the i on the time side); the trajectory-equivalence test against the
// spectral propagator pins it.
RSField evolve_rs(const RSField& r, double dt, double transversality_tol = 1e-8);

// max |k.Fhat|, |k.Ghat| over modes, relative to max |k||Fhat|, |k||Ghat|.
double transversality_residual(const RSField& r);

// Pointwise infinitesimal Lorentz map
//   F -> [1 + i*prefactor*(s.dtheta) - (1/c)(s.dv)] F,
// with the conjugate matrix applied to G (forced by G = conj(F) for real
// fields; the rotation term is shared, the boost term flips sign). The
// default prefactor is 1/(4 pi); 1 is the conventional rotation
// normalization. Sample coordinates are not remapped: this validates
// the algebraic transformation law only.
RSField lorentz_infinitesimal(const RSField& r, const Vec3& dtheta, const Vec3& dv,
                              double prefactor = 1.0 / (4.0 * kPi));

// Electron-side comparison half of the photon/electron analogy:
//   xi -> [1 + i*prefactor*(sigma.dtheta)/2 - (1/(2c))(sigma.dv)] xi.
Eigen::Vector2cd bispinor_lorentz_infinitesimal(const Eigen::Vector2cd& xi, const Vec3& dtheta,
                                                const Vec3& dv,
                                                double prefactor = 1.0 / (4.0 * kPi),
                                                double c = 1.0);

}  // namespace emlab::majorana

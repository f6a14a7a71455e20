#pragma once

#include <Eigen/Dense>

#include "emlab/common.hpp"

namespace emlab::focksu2 {

// Two-mode photon number space truncated at n_max quanta per mode, basis
// |n1, n2> ordered lexicographically. Ladder identities that change the total
// photon number only hold away from the cutoff; the truncation-safe sub-block
// n1 + n2 <= n_max - 1 is where every algebraic check below is exact.
struct TwoModeSpace {
  int n_max = 0;

  explicit TwoModeSpace(int cutoff) : n_max(cutoff) {
    require(cutoff >= 4, "TwoModeSpace: n_max must be >= 4");
  }

  int dimension() const { return (n_max + 1) * (n_max + 1); }
  int index(int n1, int n2) const {
    require(n1 >= 0 && n1 <= n_max && n2 >= 0 && n2 <= n_max, "TwoModeSpace: occupation out of range");
    return n1 * (n_max + 1) + n2;
  }
  std::pair<int, int> occupation(int idx) const { return {idx / (n_max + 1), idx % (n_max + 1)}; }
  bool truncation_safe(int idx) const {
    const auto [n1, n2] = occupation(idx);
    return n1 + n2 <= n_max - 1;
  }
};

struct OperatorMatrix {
  Eigen::MatrixXcd m;
  double hbar = 1.0;
  double omega = 1.0;
};

enum class LadderKind { Lower, Raise };

// <n-1| a |n> = sqrt(n) on the requested mode (1 or 2).
OperatorMatrix ladder(const TwoModeSpace& space, int mode, LadderKind kind);

// H_k = hbar omega (a1+ a1 + a2+ a2 + 1); diagonal in the number basis.
OperatorMatrix hamiltonian_k(const TwoModeSpace& space, double omega, double hbar = 1.0);

// A^i_j = a+_i a_j; [A^i_j, A^k_l] = d^k_j A^i_l - d^i_l A^k_j.
struct U2Generators {
  OperatorMatrix a11, a12, a21, a22;
};
U2Generators u2_generators(const TwoModeSpace& space);

// B^i_j = A^i_j - (1/2) d^i_j (A^1_1 + A^2_2); traceless by construction, so
// B^2_2 is stored as -B^1_1 and B^1_1 + B^2_2 = 0 holds exactly. The su(2)
// algebra holds on the safe sub-block.
struct SU2Generators {
  OperatorMatrix b11, b12, b21;

  Eigen::MatrixXcd b22() const { return -b11.m; }

  // angular-momentum triple: J+ = B^1_2, J- = B^2_1, Jz = (B^1_1 - B^2_2)/2
  const Eigen::MatrixXcd& j_plus() const { return b12.m; }
  const Eigen::MatrixXcd& j_minus() const { return b21.m; }
  const Eigen::MatrixXcd& j_z() const { return b11.m; }
};
SU2Generators su2_generators(const TwoModeSpace& space);

// Quadratic Casimir J^2 restricted to the (n+1)-dimensional n-photon
// subspace; the restriction must be a constant multiple of the identity
// (otherwise the algebra is broken and this throws). Expected j(j+1) with
// j = n/2 -- the D(n,0) tower.
double casimir_on_subspace(const TwoModeSpace& space, int n);

// Truncated single-oscillator thermal occupation
//   <n> = sum_{n<=n_max} n e^{-n hw/kT} / sum e^{-n hw/kT};
// approaches 1/(e^{hw/kT} - 1) as n_max grows, with truncation error below
// n_max e^{-n_max hw/kT}.
double planck_occupancy(double omega, double temperature, int n_max, double hbar = 1.0,
                        double k_b = 1.0);

double planck_closed_form(double omega, double temperature, double hbar = 1.0, double k_b = 1.0);

// Largest |entry| over columns in the truncation-safe sub-block.
double max_abs_on_safe_columns(const TwoModeSpace& space, const Eigen::MatrixXcd& m);

}  // namespace emlab::focksu2

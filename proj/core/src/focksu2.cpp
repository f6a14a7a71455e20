#include "emlab/focksu2.hpp"

namespace emlab::focksu2 {

OperatorMatrix ladder(const TwoModeSpace& space, int mode, LadderKind kind) {
  require(mode == 1 || mode == 2, "ladder: mode must be 1 or 2");
  const int dim = space.dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n1 = 0; n1 <= space.n_max; ++n1)
    for (int n2 = 0; n2 <= space.n_max; ++n2) {
      const int col = space.index(n1, n2);
      const int occ = mode == 1 ? n1 : n2;
      if (occ == 0) continue;
      const int row = mode == 1 ? space.index(n1 - 1, n2) : space.index(n1, n2 - 1);
      m(row, col) = std::sqrt(static_cast<double>(occ));
    }
  if (kind == LadderKind::Raise) m = m.adjoint().eval();
  return {std::move(m), 1.0, 1.0};
}

OperatorMatrix hamiltonian_k(const TwoModeSpace& space, double omega, double hbar) {
  require(omega > 0, "hamiltonian_k: omega must be positive");
  require(hbar > 0, "hamiltonian_k: hbar must be positive");
  const int dim = space.dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int idx = 0; idx < dim; ++idx) {
    const auto [n1, n2] = space.occupation(idx);
    m(idx, idx) = hbar * omega * (n1 + n2 + 1.0);
  }
  return {std::move(m), hbar, omega};
}

U2Generators u2_generators(const TwoModeSpace& space) {
  const Eigen::MatrixXcd a1 = ladder(space, 1, LadderKind::Lower).m;
  const Eigen::MatrixXcd a2 = ladder(space, 2, LadderKind::Lower).m;
  U2Generators g;
  g.a11 = {a1.adjoint() * a1, 1.0, 1.0};
  g.a12 = {a1.adjoint() * a2, 1.0, 1.0};
  g.a21 = {a2.adjoint() * a1, 1.0, 1.0};
  g.a22 = {a2.adjoint() * a2, 1.0, 1.0};
  return g;
}

SU2Generators su2_generators(const TwoModeSpace& space) {
  const U2Generators u = u2_generators(space);
  const Eigen::MatrixXcd total = u.a11.m + u.a22.m;
  SU2Generators g;
  g.b11 = {u.a11.m - 0.5 * total, 1.0, 1.0};
  g.b12 = u.a12;
  g.b21 = u.a21;
  return g;
}

double casimir_on_subspace(const TwoModeSpace& space, int n) {
  require(n >= 0 && n <= space.n_max, "casimir_on_subspace: n must be in 0..n_max");
  const SU2Generators g = su2_generators(space);
  const Eigen::MatrixXcd j2 = g.j_z() * g.j_z() +
                              0.5 * (g.j_plus() * g.j_minus() + g.j_minus() * g.j_plus());

  // n-photon subspace: |n1, n - n1>, n1 = 0..n
  const int dim = n + 1;
  Eigen::MatrixXcd block(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      block(r, c) = j2(space.index(r, n - r), space.index(c, n - c));

  const double value = block(0, 0).real();
  double deviation = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const Complex expected = r == c ? Complex(value, 0) : Complex(0, 0);
      deviation = std::max(deviation, std::abs(block(r, c) - expected));
    }
  if (deviation > 1e-10 * std::max(1.0, std::abs(value)))
    throw std::runtime_error("casimir_on_subspace: eigenvalue not constant on the subspace");
  return value;
}

double planck_occupancy(double omega, double temperature, int n_max, double hbar, double k_b) {
  require(temperature > 0, "planck_occupancy: temperature must be positive");
  require(omega > 0 && hbar > 0 && k_b > 0, "planck_occupancy: omega, hbar, k_b must be positive");
  require(n_max >= 1, "planck_occupancy: n_max must be >= 1");
  const double x = hbar * omega / (k_b * temperature);
  require(x >= 0.1, "planck_occupancy: hbar*omega/kT must be >= 0.1 to control truncation");
  double num = 0, den = 0;
  for (int n = 0; n <= n_max; ++n) {
    const double w = std::exp(-x * n);
    num += n * w;
    den += w;
  }
  return num / den;
}

double planck_closed_form(double omega, double temperature, double hbar, double k_b) {
  const double x = hbar * omega / (k_b * temperature);
  return 1.0 / std::expm1(x);
}

double max_abs_on_safe_columns(const TwoModeSpace& space, const Eigen::MatrixXcd& m) {
  double worst = 0;
  for (int col = 0; col < space.dimension(); ++col) {
    if (!space.truncation_safe(col)) continue;
    for (int row = 0; row < space.dimension(); ++row)
      worst = std::max(worst, std::abs(m(row, col)));
  }
  return worst;
}

}  // namespace emlab::focksu2

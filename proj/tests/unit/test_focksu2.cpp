#include "doctest.h"
#include "emlab/focksu2.hpp"

using namespace emlab;
using namespace emlab::focksu2;

namespace {

const TwoModeSpace kSpace(8);

Eigen::VectorXcd basis_vector(const TwoModeSpace& s, int n1, int n2) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.dimension());
  v(s.index(n1, n2)) = Complex(1, 0);
  return v;
}

}  // namespace

TEST_CASE("ladder operators: vacuum annihilation and matrix elements") {
  const OperatorMatrix a1 = ladder(kSpace, 1, LadderKind::Lower);
  const OperatorMatrix a1d = ladder(kSpace, 1, LadderKind::Raise);

  CHECK((a1.m * basis_vector(kSpace, 0, 0)).norm() == 0.0);

  const Eigen::VectorXcd raised = a1d.m * basis_vector(kSpace, 0, 0);
  CHECK(std::abs(raised(kSpace.index(1, 0)) - Complex(1, 0)) == 0.0);

  // <2,5| a1 |3,5> = sqrt(3)
  const Eigen::VectorXcd lowered = a1.m * basis_vector(kSpace, 3, 5);
  CHECK(lowered(kSpace.index(2, 5)) == Complex(std::sqrt(3.0), 0));

  // [a_i, a+_j] = delta_ij away from the cutoff
  const OperatorMatrix a2 = ladder(kSpace, 2, LadderKind::Lower);
  const OperatorMatrix a2d = ladder(kSpace, 2, LadderKind::Raise);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(kSpace.dimension(), kSpace.dimension());

  const auto comm = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    return (x * y - y * x).eval();
  };
  // columns with n_i < n_max stay exact
  for (int n1 = 0; n1 < kSpace.n_max; ++n1)
    for (int n2 = 0; n2 < kSpace.n_max; ++n2) {
      const int col = kSpace.index(n1, n2);
      CHECK((comm(a1.m, a1d.m) - eye).col(col).cwiseAbs().maxCoeff() <= 1e-13);
      CHECK((comm(a2.m, a2d.m) - eye).col(col).cwiseAbs().maxCoeff() <= 1e-13);
      CHECK(comm(a1.m, a2d.m).col(col).cwiseAbs().maxCoeff() <= 1e-13);
      CHECK(comm(a1.m, a2.m).col(col).cwiseAbs().maxCoeff() <= 1e-13);
    }
  // and the truncation boundary is where the identity must fail
  const int corner = kSpace.index(kSpace.n_max, 0);
  CHECK(std::abs(comm(a1.m, a1d.m)(corner, corner) - Complex(1, 0)) > 1.0);
}

TEST_CASE("oscillator hamiltonian is diagonal with the +1 ground term") {
  const double omega = 1.8, hbar = 2.0;
  const OperatorMatrix h = hamiltonian_k(kSpace, omega, hbar);

  CHECK(h.m(kSpace.index(0, 0), kSpace.index(0, 0)) == Complex(hbar * omega, 0));
  CHECK(h.m(kSpace.index(2, 3), kSpace.index(2, 3)) == Complex(6.0 * hbar * omega, 0));

  double offdiag = 0;
  for (int r = 0; r < kSpace.dimension(); ++r)
    for (int c = 0; c < kSpace.dimension(); ++c)
      if (r != c) offdiag = std::max(offdiag, std::abs(h.m(r, c)));
  CHECK(offdiag == 0.0);
}

TEST_CASE("u(2) commutators close on the safe sub-block") {
  const U2Generators g = u2_generators(kSpace);
  const Eigen::MatrixXcd* a[2][2] = {{&g.a11.m, &g.a12.m}, {&g.a21.m, &g.a22.m}};

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const Eigen::MatrixXcd lhs = (*a[i][j]) * (*a[k][l]) - (*a[k][l]) * (*a[i][j]);
          Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(kSpace.dimension(), kSpace.dimension());
          if (k == j) rhs += *a[i][l];
          if (i == l) rhs -= *a[k][j];
          CHECK(max_abs_on_safe_columns(kSpace, lhs - rhs) <= 1e-13);
        }

  // [A12, A21] = A11 - A22 named explicitly
  const Eigen::MatrixXcd named = g.a12.m * g.a21.m - g.a21.m * g.a12.m - (g.a11.m - g.a22.m);
  CHECK(max_abs_on_safe_columns(kSpace, named) <= 1e-13);

  // [A11, A22] = 0
  const Eigen::MatrixXcd zero = g.a11.m * g.a22.m - g.a22.m * g.a11.m;
  CHECK(max_abs_on_safe_columns(kSpace, zero) <= 1e-13);

  // generators commute with the hamiltonian
  const OperatorMatrix h = hamiltonian_k(kSpace, 1.3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Eigen::MatrixXcd hc = h.m * (*a[i][j]) - (*a[i][j]) * h.m;
      CHECK(max_abs_on_safe_columns(kSpace, hc) <= 1e-13);
    }
}

TEST_CASE("su(2) generators: tracelessness and algebra against brute-force products") {
  const SU2Generators b = su2_generators(kSpace);
  const U2Generators u = u2_generators(kSpace);

  // B11 + B22 = 0 exactly (B22 is the traceless completion -B11); the
  // product-route A22 - (A11+A22)/2 agrees to round-off
  CHECK((b.b11.m + b.b22()).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXcd b22_products = u.a22.m - 0.5 * (u.a11.m + u.a22.m);
  CHECK((b.b22() - b22_products).cwiseAbs().maxCoeff() <= 1e-14 * kSpace.n_max);

  // [J+, J-] = 2 Jz, [Jz, J+-] = +-J+-, all via direct matrix products
  const Eigen::MatrixXcd c1 = b.j_plus() * b.j_minus() - b.j_minus() * b.j_plus() - 2.0 * b.j_z();
  CHECK(max_abs_on_safe_columns(kSpace, c1) <= 1e-13);
  const Eigen::MatrixXcd c2 = b.j_z() * b.j_plus() - b.j_plus() * b.j_z() - b.j_plus();
  CHECK(max_abs_on_safe_columns(kSpace, c2) <= 1e-13);
  const Eigen::MatrixXcd c3 = b.j_z() * b.j_minus() - b.j_minus() * b.j_z() + b.j_minus();
  CHECK(max_abs_on_safe_columns(kSpace, c3) <= 1e-13);

  const OperatorMatrix h = hamiltonian_k(kSpace, 0.7);
  for (const Eigen::MatrixXcd* gen : {&b.b11.m, &b.b12.m, &b.b21.m}) {
    const Eigen::MatrixXcd hc = h.m * (*gen) - (*gen) * h.m;
    CHECK(max_abs_on_safe_columns(kSpace, hc) <= 1e-13);
  }
}

TEST_CASE("casimir spectrum on the photon-number subspaces is j(j+1), j = n/2") {
  CHECK(casimir_on_subspace(kSpace, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(casimir_on_subspace(kSpace, 1) == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(casimir_on_subspace(kSpace, 2) == doctest::Approx(2.0).epsilon(1e-13));
  for (int n = 3; n <= kSpace.n_max - 1; ++n) {
    const double j = 0.5 * n;
    CHECK(std::abs(casimir_on_subspace(kSpace, n) - j * (j + 1.0)) <= 1e-12 * (j * (j + 1.0)));
  }
}

TEST_CASE("planck occupancy: closed form, frozen limit, truncation bound") {
  // hw/kT = 1, n_max = 60: 1/(e-1)
  const double got = planck_occupancy(1.0, 1.0, 60);
  CHECK(std::abs(got - 1.0 / (std::exp(1.0) - 1.0)) <= 1e-12);
  CHECK(std::abs(got - planck_closed_form(1.0, 1.0)) <= 1e-12);

  // frozen oscillator
  CHECK(planck_occupancy(50.0, 1.0, 60) <= 1e-20);

  // hw/kT = ln 2 gives exactly 1 in the closed form
  CHECK(planck_closed_form(std::log(2.0), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(planck_occupancy(std::log(2.0), 1.0, 120) - 1.0) <= 1e-12);

  // truncation error decays within the stated bound across cutoffs
  for (int cutoff : {20, 40, 60}) {
    const double err = std::abs(planck_occupancy(1.0, 1.0, cutoff) - planck_closed_form(1.0, 1.0));
    CHECK(err <= cutoff * std::exp(-static_cast<double>(cutoff)));
  }

  // configurable constants: hbar omega / (k_b T) is all that matters
  CHECK(planck_occupancy(0.5, 2.0, 60, 4.0, 1.0) == planck_occupancy(1.0, 1.0, 60));

  CHECK_THROWS_AS(planck_occupancy(1.0, -1.0, 60), std::invalid_argument);
  CHECK_THROWS_AS(planck_occupancy(0.01, 1.0, 60), std::invalid_argument);
}

TEST_CASE("space validation") {
  CHECK_THROWS_AS(TwoModeSpace(3), std::invalid_argument);
  CHECK_THROWS_AS(casimir_on_subspace(kSpace, kSpace.n_max + 1), std::invalid_argument);
  CHECK_THROWS_AS(ladder(kSpace, 3, LadderKind::Lower), std::invalid_argument);
}

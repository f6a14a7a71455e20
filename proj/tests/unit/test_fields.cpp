#include "doctest.h"
#include "emlab/differential.hpp"
#include "emlab/fft.hpp"
#include "emlab/helmholtz.hpp"
#include "emlab/randomfields.hpp"
#include "emlab/spherical.hpp"

using namespace emlab;

namespace {

const GridSpec kGrid{16, 0.5, 1.0};

double two_pi_over_l(const GridSpec& g) { return 2.0 * kPi / g.length(); }

}  // namespace

TEST_CASE("divergence of uniform and transverse fields vanishes") {
  VectorFieldGrid uniform = make_vector_field(kGrid, [](Vec3) { return Vec3{1, 0, 0}; });
  CHECK(max_abs(divergence(uniform)) == 0.0);

  const double k = two_pi_over_l(kGrid);
  VectorFieldGrid transverse =
      make_vector_field(kGrid, [k](Vec3 p) { return Vec3{std::sin(k * p.y), 0, 0}; });
  CHECK(max_abs(divergence(transverse)) <= 1e-13);
}

TEST_CASE("divergence of a longitudinal mode matches the analytic derivative to O(h^2)") {
  const double k = two_pi_over_l(kGrid);
  VectorFieldGrid f =
      make_vector_field(kGrid, [k](Vec3 p) { return Vec3{std::sin(k * p.x), 0, 0}; });
  const ScalarFieldGrid div = divergence(f);

  // central differences turn the wavenumber into sin(kh)/h exactly
  const double ktilde = std::sin(k * kGrid.h) / kGrid.h;
  double worst_exact = 0, worst_analytic = 0;
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz) {
        const double x = ix * kGrid.h;
        worst_exact = std::max(worst_exact, std::abs(div.at(ix, iy, iz) - ktilde * std::cos(k * x)));
        worst_analytic = std::max(worst_analytic, std::abs(div.at(ix, iy, iz) - k * std::cos(k * x)));
      }
  CHECK(worst_exact <= 1e-13);
  const double h2_bound = k * k * k * kGrid.h * kGrid.h / 6.0;
  CHECK(worst_analytic <= 1.1 * h2_bound);
}

TEST_CASE("curl kills gradients and reproduces the analytic curl of a shear mode") {
  const double k = two_pi_over_l(kGrid);
  ScalarFieldGrid chi = make_scalar_field(kGrid, [k](Vec3 p) { return std::sin(k * p.x); });
  CHECK(max_abs(curl(gradient(chi))) <= 1e-13);

  VectorFieldGrid a =
      make_vector_field(kGrid, [k](Vec3 p) { return Vec3{0, std::sin(k * p.x), 0}; });
  const VectorFieldGrid c = curl(a);
  double worst = 0;
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz) {
        const Vec3 expected{0, 0, k * std::cos(k * ix * kGrid.h)};
        worst = std::max(worst, norm(c.at(ix, iy, iz) - expected));
      }
  CHECK(worst <= k * k * k * kGrid.h * kGrid.h / 6.0 * 1.1);

  VectorFieldGrid zero(kGrid);
  CHECK(max_abs(curl(zero)) == 0.0);
}

TEST_CASE("div(curl f) vanishes under refinement") {
  // commuting central-difference shifts make the identity exact; the residual
  // is round-off on every grid, which is stronger than the O(h^2) bound
  const auto residual = [](const GridSpec& g) {
    VectorFieldGrid f = random_smooth_vector(g, 99, 3);
    return max_abs(divergence(curl(f))) / (max_abs(curl(f)) / g.h);
  };
  CHECK(residual(GridSpec{16, 0.5, 1.0}) <= 1e-13);
  CHECK(residual(GridSpec{32, 0.25, 1.0}) <= 1e-13);
}

TEST_CASE("helmholtz split: gradients are longitudinal, shear modes transverse") {
  const double k = two_pi_over_l(kGrid);
  ScalarFieldGrid chi = make_scalar_field(kGrid, [k](Vec3 p) { return std::sin(k * p.x); });
  const HelmholtzParts grad_parts = helmholtz_split(gradient(chi));
  CHECK(max_abs(grad_parts.transverse) <= 1e-10 * max_abs(grad_parts.longitudinal));

  VectorFieldGrid shear =
      make_vector_field(kGrid, [k](Vec3 p) { return Vec3{0, std::sin(k * p.x), 0}; });
  const HelmholtzParts shear_parts = helmholtz_split(shear);
  CHECK(max_abs(shear_parts.longitudinal) <= 1e-12 * max_abs(shear_parts.transverse));
}

TEST_CASE("helmholtz split reassembles the input and parts are orthogonal") {
  VectorFieldGrid f = random_smooth_vector(kGrid, 7);
  const HelmholtzParts parts = helmholtz_split(f);

  double worst = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Vec3 sum = parts.transverse.values[i] + parts.longitudinal.values[i] + parts.dc;
    worst = std::max(worst, norm(sum - f.values[i]));
  }
  CHECK(worst <= 1e-12 * max_abs(f));

  const double ortho = std::abs(inner(parts.transverse, parts.longitudinal));
  CHECK(ortho <= 1e-10 * l2_norm(parts.transverse) * l2_norm(parts.longitudinal));
}

TEST_CASE("project_transverse is idempotent, kills gradients, agrees with the split") {
  VectorFieldGrid f = random_smooth_vector(kGrid, 21);
  const VectorFieldGrid once = project_transverse(f);
  const VectorFieldGrid twice = project_transverse(once);
  CHECK(max_abs_diff(once, twice) <= 1e-12 * max_abs(once));

  CHECK(relative_spectral_divergence(once) <= 1e-10);

  const double k = two_pi_over_l(kGrid);
  ScalarFieldGrid chi = make_scalar_field(kGrid, [k](Vec3 p) { return std::sin(k * p.x); });
  VectorFieldGrid grad = gradient(chi);
  const VectorFieldGrid projected = project_transverse(grad, /*keep_dc=*/false);
  CHECK(max_abs(projected) <= 1e-12 * max_abs(grad));

  const HelmholtzParts parts = helmholtz_split(f);
  VectorFieldGrid with_dc = parts.transverse;
  for (Vec3& v : with_dc.values) v += parts.dc;
  CHECK(max_abs_diff(once, with_dc) <= 1e-13 * max_abs(f));
}

TEST_CASE("gauge transform leaves the curl unchanged") {
  const double k = two_pi_over_l(kGrid);
  ScalarFieldGrid constant = make_scalar_field(kGrid, [](Vec3) { return 2.5; });
  VectorFieldGrid a = random_smooth_vector(kGrid, 3);
  CHECK(max_abs_diff(gauge_transform(a, constant), a) == 0.0);

  VectorFieldGrid zero(kGrid);
  ScalarFieldGrid psi = make_scalar_field(kGrid, [k](Vec3 p) { return std::sin(k * p.x); });
  const VectorFieldGrid pure_grad = gauge_transform(zero, psi);
  double worst = 0;
  for (int ix = 0; ix < kGrid.n; ++ix)
    for (int iy = 0; iy < kGrid.n; ++iy)
      for (int iz = 0; iz < kGrid.n; ++iz) {
        const Vec3 expected{k * std::cos(k * ix * kGrid.h), 0, 0};
        worst = std::max(worst, norm(pure_grad.at(ix, iy, iz) - expected));
      }
  CHECK(worst <= k * k * k * kGrid.h * kGrid.h / 6.0 * 1.1);

  // curl(grad) cancels exactly on the commuting stencils, so gauge invariance
  // of the discrete curl holds to round-off for any smooth generator
  ScalarFieldGrid smooth_psi = random_smooth_scalar(kGrid, 11);
  const double residual = max_abs_diff(curl(gauge_transform(a, smooth_psi)), curl(a));
  CHECK(residual <= 1e-13 * std::max(1.0, max_abs(curl(a))) / kGrid.h);
}

TEST_CASE("spherical divergence: inverse-square radial field is divergence-free") {
  SphericalField field;
  const double c_values[] = {1.0, 5.0, -2.5};
  for (double cval : c_values) {
    field.e_r = [cval](double r, double, double) { return cval / (r * r); };
    field.e_theta = [](double, double, double) { return 0.0; };
    field.e_phi = [](double, double, double) { return 0.0; };

    GaussianStream gs(404);
    std::vector<SphericalPoint> pts;
    for (int i = 0; i < 20; ++i)
      pts.push_back({0.5 + 4.5 * gs.uniform(), 0.3 + (kPi - 0.6) * gs.uniform(),
                     2.0 * kPi * gs.uniform()});
    for (double d : spherical_divergence(field, pts, 1e-4)) CHECK(std::abs(d) <= 1e-8);
  }
}

TEST_CASE("spherical divergence: constant radial component gives 2/r, zero gives zero") {
  SphericalField field;
  field.e_r = [](double, double, double) { return 1.0; };
  field.e_theta = [](double, double, double) { return 0.0; };
  field.e_phi = [](double, double, double) { return 0.0; };
  const std::vector<SphericalPoint> pts = {{1.0, 1.0, 0.5}, {2.0, 2.0, 4.0}, {0.75, 0.4, 1.0}};
  const std::vector<double> vals = spherical_divergence(field, pts);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::abs(vals[i] - 2.0 / pts[i].r) <= 1e-9);

  field.e_r = [](double, double, double) { return 0.0; };
  for (double d : spherical_divergence(field, pts)) CHECK(d == 0.0);
}

TEST_CASE("spherical divergence: full formula on a mixed analytic field") {
  // E_r = r cos(theta), E_theta = sin(theta) cos(phi), E_phi = r sin(phi);
  // div = 3cos(t) + [2 sin... derived by hand:
  //   (1/r^2) d(r^3 cos t)/dr = 3 cos t
  //   (1/(r sin t)) d(sin^2 t cos p)/dt = 2 cos t cos p / r
  //   (1/(r sin t)) d(r sin p)/dp = cos p / sin t
  SphericalField field;
  field.e_r = [](double r, double t, double) { return r * std::cos(t); };
  field.e_theta = [](double, double t, double p) { return std::sin(t) * std::cos(p); };
  field.e_phi = [](double r, double, double p) { return r * std::sin(p); };
  const std::vector<SphericalPoint> pts = {{1.3, 0.9, 0.7}, {2.4, 2.2, 5.2}};
  const std::vector<double> vals = spherical_divergence(field, pts, 1e-5);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& q = pts[i];
    const double expected = 3.0 * std::cos(q.theta) +
                            2.0 * std::cos(q.theta) * std::cos(q.phi) / q.r +
                            std::cos(q.phi) / std::sin(q.theta);
    CHECK(std::abs(vals[i] - expected) <= 1e-7 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("spherical divergence rejects singular samples") {
  SphericalField field;
  field.e_r = field.e_theta = field.e_phi = [](double, double, double) { return 0.0; };
  CHECK_THROWS_AS(spherical_divergence(field, {{0.0, 1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(spherical_divergence(field, {{1.0, 0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(spherical_divergence(field, {{1.0, kPi, 0.0}}), std::invalid_argument);
}

TEST_CASE("radial falloff fit recovers exact power laws") {
  const auto sample = [](double amp, double expo) {
    std::vector<std::pair<double, double>> s;
    for (double r : {1.0, 2.0, 4.0, 8.0}) s.push_back({r, amp * std::pow(r, expo)});
    return s;
  };

  FalloffFit fit = radial_falloff_fit(sample(5.0, -2.0));
  CHECK(std::abs(fit.exponent + 2.0) <= 1e-12);
  CHECK(std::abs(fit.amplitude - 5.0) <= 1e-12);

  fit = radial_falloff_fit(sample(3.0, 0.0));
  CHECK(std::abs(fit.exponent) <= 1e-12);

  fit = radial_falloff_fit(sample(1.0, -3.0));
  CHECK(std::abs(fit.exponent + 3.0) <= 1e-12);

  CHECK_THROWS_AS(radial_falloff_fit({{1.0, 1.0}, {2.0, -0.5}, {3.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(radial_falloff_fit({{1.0, 1.0}, {2.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("spectral round trip reproduces any field") {
  for (std::uint64_t seed : {1, 2}) {
    VectorFieldGrid f = random_smooth_vector(kGrid, seed, kGrid.n / 2 - 1);
    const VectorFieldGrid back = inverse_to_vector(kGrid, spectral_of(f));
    CHECK(max_abs_diff(back, f) <= 1e-12 * max_abs(f));

    ScalarFieldGrid g = random_smooth_scalar(kGrid, seed + 10);
    const ScalarFieldGrid gback = inverse_to_scalar(kGrid, spectral_of(g));
    double worst = 0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
      worst = std::max(worst, std::abs(gback.values[i] - g.values[i]));
    CHECK(worst <= 1e-12 * max_abs(g));
  }
}

TEST_CASE("sampled spherical field carries its components and validates") {
  SphericalField field;
  field.e_r = [](double r, double, double) { return 1.0 / r; };
  field.e_theta = [](double, double t, double) { return std::sin(t); };
  field.e_phi = [](double, double, double p) { return std::cos(p); };
  const std::vector<SphericalPoint> pts = {{1.0, 1.2, 0.3}, {2.5, 0.8, 4.0}};
  const SphericalSamples s = sample_field(field, pts);
  REQUIRE(s.components.size() == 2);
  CHECK(s.components[0].x == 1.0);
  CHECK(s.components[1].y == doctest::Approx(std::sin(0.8)).epsilon(1e-15));

  const std::vector<double> via_samples = spherical_divergence(field, s);
  const std::vector<double> direct = spherical_divergence(field, pts);
  for (std::size_t i = 0; i < direct.size(); ++i) CHECK(via_samples[i] == direct[i]);

  SphericalSamples bad = s;
  bad.points[0].r = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("grid spec invariants are enforced") {
  CHECK_THROWS_AS((GridSpec{3, 0.5, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{8, 0.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{8, 0.5, -1.0}).validate(), std::invalid_argument);
}

#include "scenarios.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "emlab/brackets.hpp"
#include "emlab/clebsch.hpp"
#include "emlab/differential.hpp"
#include "emlab/dualmaxwell.hpp"
#include "emlab/focksu2.hpp"
#include "emlab/helmholtz.hpp"
#include "emlab/io.hpp"
#include "emlab/majorana.hpp"
#include "emlab/propagator.hpp"
#include "emlab/randomfields.hpp"
#include "emlab/spherical.hpp"

namespace emlab::cli {
namespace {

constexpr const char* kVersion = "0.1.0";
namespace fs = std::filesystem;

struct CommonSetup {
  GridSpec grid;
  std::uint64_t seed = 0;
  fs::path out_dir;
  Provenance prov;
};

CommonSetup common_setup(const Config& cfg) {
  CommonSetup s;
  s.grid.n = static_cast<int>(cfg.get_int("grid.n", 16));
  s.grid.h = cfg.get_num("grid.h", 0.25);
  s.grid.c = cfg.get_num("phys.c", 1.0);
  s.grid.validate();
  s.seed = static_cast<std::uint64_t>(cfg.get_int("run.seed", 1));
  s.out_dir = cfg.get_str("out.dir", "emlab-out");
  s.prov = Provenance{kVersion, cfg.hash(), s.seed};
  set_worker_threads(static_cast<int>(cfg.get_int("run.threads", 1)));
  return s;
}

std::ofstream open_output(const CommonSetup& s, const std::string& name) {
  fs::create_directories(s.out_dir);
  std::ofstream out(s.out_dir / name);
  if (!out) throw std::runtime_error("cannot create output file " + (s.out_dir / name).string());
  out << s.prov.header();
  return out;
}

std::string fmt(double v) { return format_float(v); }

// ----- initial-condition presets shared by propagate and majorana ----------

propagator::SpectralModeSet initial_modes(const Config& cfg, const CommonSetup& s, double hbar) {
  using namespace propagator;
  const std::string preset = cfg.get_str("ic.preset", "plane-wave");
  const double amplitude = cfg.get_num("ic.amplitude", 1.0);

  if (preset == "plane-wave") {
    const int mx = static_cast<int>(cfg.get_int("ic.kx", 1));
    const int my = static_cast<int>(cfg.get_int("ic.ky", 0));
    const int mz = static_cast<int>(cfg.get_int("ic.kz", 0));
    const int alpha = static_cast<int>(cfg.get_int("ic.alpha", 1));
    if (alpha != 1 && alpha != 2)
      throw std::invalid_argument("ic.alpha must be 1 or 2");
    if (mx == 0 && my == 0 && mz == 0)
      throw std::invalid_argument("plane-wave preset needs a nonzero mode index");
    SpectralModeSet m = make_mode_set(s.grid, hbar);
    const Vec3 k = k_vector(s.grid.wrap(mx), s.grid.wrap(my), s.grid.wrap(mz), s.grid);
    const auto& modes = m.basis->modes();
    for (std::size_t i = 0; i < modes.size(); ++i) {
      if (norm(modes[i].k - k) < 1e-12) {
        m.amp(i, alpha) = Complex(amplitude, 0);
        return m;
      }
    }
    throw std::invalid_argument("plane-wave preset: mode index not representable on this grid");
  }
  if (preset == "gaussian-packet") {
    const double sigma = cfg.get_num("ic.sigma", 0.15 * s.grid.length());
    if (sigma < 2.5 * s.grid.h)
      throw std::invalid_argument("gaussian-packet: ic.sigma must be at least 2.5 h");
    const int mx = static_cast<int>(cfg.get_int("ic.kx", 2));
    const double k0 = 2.0 * kPi * mx / s.grid.length();
    const double half = 0.5 * s.grid.length();
    VectorFieldGrid a = make_vector_field(s.grid, [&](Vec3 p) {
      double r2 = 0;
      const double q[3] = {p.x - half, p.y - half, p.z - half};
      for (double d : q) r2 += d * d;
      return Vec3{0, amplitude * std::exp(-r2 / (2.0 * sigma * sigma)) * std::cos(k0 * p.x), 0};
    });
    a = low_pass(a, s.grid.n / 3);
    a = project_transverse(a, /*keep_dc=*/false);
    return expand(a, VectorFieldGrid(s.grid), hbar);
  }
  if (preset == "random-transverse") {
    SpectralModeSet m = random_modes(s.grid, s.seed, hbar);
    for (Complex& c : m.amps) c *= amplitude;
    return m;
  }
  if (preset == "file") {
    const std::string a_file = cfg.get_str("ic.a_file", "");
    const std::string e_file = cfg.get_str("ic.e_file", "");
    if (a_file.empty() || e_file.empty())
      throw std::invalid_argument("file preset needs ic.a_file and ic.e_file");
    const Snapshot a = read_snapshot(a_file);
    const Snapshot e = read_snapshot(e_file);
    if (a.components != 3 || e.components != 3)
      throw std::invalid_argument("file preset: snapshots must hold vector fields");
    return expand(a.vector, e.vector, hbar);
  }
  throw std::invalid_argument("unknown ic.preset: " + preset);
}

}  // namespace

void run_propagate(const Config& cfg) {
  using namespace propagator;
  const CommonSetup s = common_setup(cfg);
  const double hbar = cfg.get_num("phys.hbar", 1.0);
  const long steps = cfg.get_int("run.steps", 100);
  const double dt = cfg.get_num("run.dt", 0.05);
  const long cadence = cfg.get_int("run.cadence", 1);
  if (steps < 0 || cadence < 1) throw std::invalid_argument("run.steps/run.cadence out of range");

  SpectralModeSet m = initial_modes(cfg, s, hbar);
  const double dtp = default_probe_dt(s.grid);

  auto out = open_output(s, "propagate.csv");
  out << "t,energy,r1,r2,r3,r4,wave_residual\n";
  double t = 0;
  const auto emit = [&]() {
    const MaxwellResiduals r = maxwell_residuals(m, dtp);
    const WaveEquationResidual w = wave_equation_residual(m, dtp);
    out << fmt(t) << ',' << fmt(energy(m)) << ',' << fmt(r.r1) << ',' << fmt(r.r2) << ','
        << fmt(r.r3) << ',' << fmt(r.r4) << ',' << fmt(w.value) << '\n';
  };
  emit();
  for (long i = 1; i <= steps; ++i) {
    m = evolve(m, dt);
    t = i * dt;
    if (i % cadence == 0) emit();
  }

  if (cfg.get_flag("out.snapshots", false)) {
    const SynthesizedFields f = synthesize(m);
    write_snapshot((s.out_dir / "final_a.emf").string(), f.a);
    write_snapshot((s.out_dir / "final_e.emf").string(), f.e);
    write_snapshot((s.out_dir / "final_h.emf").string(), f.h);
  }
}

void run_majorana(const Config& cfg) {
  using namespace propagator;
  const CommonSetup s = common_setup(cfg);
  const double hbar = cfg.get_num("phys.hbar", 1.0);
  const long steps = cfg.get_int("run.steps", 100);
  const double dt = cfg.get_num("run.dt", 0.05);
  const long cadence = cfg.get_int("run.cadence", 1);
  const bool compare = cfg.get_flag("majorana.compare", false);
  if (steps < 0 || cadence < 1) throw std::invalid_argument("run.steps/run.cadence out of range");

  SpectralModeSet m = initial_modes(cfg, s, hbar);
  const SynthesizedFields f0 = synthesize(m);
  majorana::RSField r = majorana::to_rs(f0.e, f0.h);
  const double scale = std::max({max_abs(f0.e), max_abs(f0.h), 1e-300});

  auto out = open_output(s, "majorana.csv");
  out << (compare ? "t,energy,transversality,de_rel,dh_rel\n" : "t,energy,transversality\n");

  double t = 0;
  const auto emit = [&]() {
    const majorana::RealFields fields = majorana::from_rs(r);
    double energy_grid = 0;
    for (std::size_t i = 0; i < fields.e.values.size(); ++i)
      energy_grid +=
          dot(fields.e.values[i], fields.e.values[i]) + dot(fields.h.values[i], fields.h.values[i]);
    energy_grid *= 0.5 * s.grid.cell_volume();
    out << fmt(t) << ',' << fmt(energy_grid) << ',' << fmt(majorana::transversality_residual(r));
    if (compare) {
      const SynthesizedFields ref = synthesize(m);
      out << ',' << fmt(max_abs_diff(fields.e, ref.e) / scale) << ','
          << fmt(max_abs_diff(fields.h, ref.h) / scale);
    }
    out << '\n';
  };
  emit();
  for (long i = 1; i <= steps; ++i) {
    r = majorana::evolve_rs(r, dt);
    if (compare) m = evolve(m, dt);
    t = i * dt;
    if (i % cadence == 0) emit();
  }
}

namespace {

using dualmaxwell::FieldState;
using dualmaxwell::Schedule;
using dualmaxwell::SourceSet;

// band-limited zero-mean charge blob centered mid-box
ScalarFieldGrid blob(const GridSpec& g, double q, double sigma) {
  const double half = 0.5 * g.length();
  ScalarFieldGrid rho = make_scalar_field(g, [&](Vec3 p) {
    const double q3[3] = {p.x - half, p.y - half, p.z - half};
    double r2 = 0;
    for (double d : q3) r2 += d * d;
    return q * std::exp(-r2 / (2.0 * sigma * sigma));
  });
  rho = low_pass(rho, g.n / 3);
  double mean = 0;
  for (double v : rho.values) mean += v;
  mean /= static_cast<double>(rho.values.size());
  for (double& v : rho.values) v -= mean;
  return rho;
}

struct DualScenario {
  FieldState state;
  SourceSet src;
};

DualScenario dual_scenario(const Config& cfg, const CommonSetup& s, double dt, long steps) {
  const std::string preset = cfg.get_str("dual.preset", "pulse");
  DualScenario sc;
  sc.state = FieldState(s.grid);

  if (preset == "pulse") {
    sc.state.e = dualmaxwell::divergence_free_random(s.grid, s.seed);
    sc.state.h = dualmaxwell::divergence_free_random(s.grid, s.seed + 1);
    return sc;
  }
  if (preset == "static-monopole") {
    ScalarFieldGrid rho_m = blob(s.grid, cfg.get_num("ic.amplitude", 1.0), 2.0 * s.grid.h);
    sc.state.h = dualmaxwell::coulomb_field_for(rho_m);
    sc.src.rho_m = Schedule<ScalarFieldGrid>::constant(std::move(rho_m));
    return sc;
  }
  if (preset == "oscillating-dipole") {
    const double omega0 = cfg.get_num("ic.omega", 1.5);
    ScalarFieldGrid rho0 = blob(s.grid, cfg.get_num("ic.amplitude", 1.0), 3.0 * s.grid.h);
    // j built spectrally so the stencil continuity holds: div_h j0 = omega0 rho0
    SpectralScalar rhat = spectral_of(rho0);
    SpectralVector jhat(s.grid.size());
    for (int ix = 0; ix < s.grid.n; ++ix)
      for (int iy = 0; iy < s.grid.n; ++iy)
        for (int iz = 0; iz < s.grid.n; ++iz) {
          const std::size_t idx = s.grid.index(ix, iy, iz);
          const Vec3 k = k_vector(ix, iy, iz, s.grid);
          const Vec3 kt{std::sin(k.x * s.grid.h) / s.grid.h, std::sin(k.y * s.grid.h) / s.grid.h,
                        std::sin(k.z * s.grid.h) / s.grid.h};
          const double kt2 = dot(kt, kt);
          if (kt2 < 1e-24) continue;
          jhat[idx] = Complex(0, -omega0 / kt2) * (rhat[idx] * to_cvec(kt));
        }
    const VectorFieldGrid j0 = inverse_to_vector(s.grid, jhat);

    Schedule<ScalarFieldGrid> rho_sched{0.0, dt / 2.0, {}};
    Schedule<VectorFieldGrid> j_sched{0.0, dt / 2.0, {}};
    for (long f = 0; f <= 2 * steps + 2; ++f) {
      const double t = f * dt / 2.0;
      ScalarFieldGrid rframe = rho0;
      for (double& v : rframe.values) v *= std::cos(omega0 * t);
      VectorFieldGrid jframe = j0;
      for (Vec3& v : jframe.values) v *= std::sin(omega0 * t);
      rho_sched.frames.push_back(std::move(rframe));
      j_sched.frames.push_back(std::move(jframe));
    }
    sc.state.e = dualmaxwell::coulomb_field_for(rho0);
    sc.src.rho_e = std::move(rho_sched);
    sc.src.j_e = std::move(j_sched);
    return sc;
  }
  throw std::invalid_argument("unknown dual.preset: " + preset);
}

}  // namespace

void run_dual(const Config& cfg) {
  using namespace dualmaxwell;
  const CommonSetup s = common_setup(cfg);
  const long steps = cfg.get_int("run.steps", 100);
  const double dt = cfg.get_num("run.dt", 0.5 * cfl_limit(s.grid));
  if (steps < 0) throw std::invalid_argument("run.steps out of range");
  if (s.grid.c * dt > s.grid.h / std::sqrt(3.0))
    throw std::invalid_argument("run.dt violates the CFL limit " +
                                std::to_string(cfl_limit(s.grid)));

  const std::string sign_name = cfg.get_str("dual.jm_sign", "plus");
  MagneticCurrentSign sign;
  if (sign_name == "plus") sign = MagneticCurrentSign::PlusOnCurlE;
  else if (sign_name == "minus") sign = MagneticCurrentSign::MinusOnCurlE;
  else throw std::invalid_argument("dual.jm_sign must be 'plus' or 'minus'");

  DualScenario sc = dual_scenario(cfg, s, dt, steps);
  const ContinuityResiduals cont = continuity_residual(sc.src, dt / 2.0);

  auto out = open_output(s, "dual.csv");
  out << "t,energy,re,rm,ce,cm\n";
  const auto emit = [&](const FieldState& st) {
    const GaussResiduals g = gauss_residuals(st, sc.src);
    out << fmt(st.t) << ',' << fmt(field_energy(st)) << ',' << fmt(g.re) << ',' << fmt(g.rm) << ','
        << fmt(cont.ce) << ',' << fmt(cont.cm) << '\n';
  };
  emit(sc.state);
  for (long i = 0; i < steps; ++i) {
    sc.state = step(sc.state, sc.src, dt, sign);
    emit(sc.state);
  }

  if (cfg.get_flag("out.snapshots", false)) {
    write_snapshot((s.out_dir / "final_e.emf").string(), sc.state.e);
    write_snapshot((s.out_dir / "final_h.emf").string(), sc.state.h);
  }

  // duality-rotation commutation, reported under both sign conventions
  auto dual_out = open_output(s, "dual_duality.csv");
  dual_out << "sign,theta,commutation_residual,scale\n";
  FieldState probe(s.grid);
  probe.e = divergence_free_random(s.grid, s.seed + 11);
  probe.h = divergence_free_random(s.grid, s.seed + 12);
  SourceSet probe_src = sc.src;
  const double scale = max_abs(probe.e) + max_abs(probe.h);
  for (MagneticCurrentSign test_sign : {MagneticCurrentSign::PlusOnCurlE, MagneticCurrentSign::MinusOnCurlE}) {
    for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 2.0}) {
      const auto [rot, rsrc] = duality_rotate(probe, probe_src, theta);
      const auto round_trip = duality_rotate(step(rot, rsrc, dt, test_sign), rsrc, -theta).first;
      const FieldState direct = step(probe, probe_src, dt, test_sign);
      const double residual =
          std::max(max_abs_diff(round_trip.e, direct.e), max_abs_diff(round_trip.h, direct.h));
      dual_out << (test_sign == MagneticCurrentSign::PlusOnCurlE ? "plus" : "minus") << ','
               << fmt(theta) << ',' << fmt(residual) << ',' << fmt(scale) << '\n';
    }
  }
}

void run_brackets(const Config& cfg) {
  using namespace brackets;
  const CommonSetup s = common_setup(cfg);
  const long n_states = cfg.get_int("brackets.states", 20);
  const long n_points = cfg.get_int("brackets.points", 10);
  if (n_states < 1 || n_points < 1)
    throw std::invalid_argument("brackets.states/points must be positive");

  auto out = open_output(s, "brackets.csv");
  out << "check,state,point,residual,tolerance,pass\n";

  GaussianStream site_picker(s.seed ^ 0xb5ac5e1ull);
  for (long st = 0; st < n_states; ++st) {
    CanonicalLattice state(s.grid);
    for (int mu = 0; mu < 4; ++mu) {
      state.a[mu] = random_smooth_scalar(s.grid, s.seed + 16 * st + mu, s.grid.n / 4).values;
      state.b[mu] = random_smooth_scalar(s.grid, s.seed + 16 * st + 8 + mu, s.grid.n / 4).values;
    }

    // canonical pair: one site per state, all 16 (mu, nu) pairs
    const std::size_t x0 =
        static_cast<std::size_t>(site_picker.uniform() * static_cast<double>(s.grid.size()));
    const double inv_h3 = 1.0 / s.grid.cell_volume();
    double worst_pair = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        ValueFunctional b(Slot::B, mu, x0);
        ValueFunctional a(Slot::A, nu, x0);
        const double expected = mu == nu ? -inv_h3 : 0.0;
        worst_pair = std::max(worst_pair,
                              std::abs(poisson_bracket(b, a, state) - expected) / inv_h3);
      }
    out << "canonical-pair," << st << ',' << x0 << ',' << fmt(worst_pair) << ',' << fmt(1e-12)
        << ',' << (worst_pair <= 1e-12 ? "1" : "0") << '\n';

    double scale = 0;
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      DivBFunctional div_probe(s.grid, i);
      scale = std::max(scale, std::abs(div_probe.eval(state)));
      if (i > 256) break;  // a sample is enough for the normalization
    }
    scale = std::max(scale, 1.0);

    for (long pt = 0; pt < n_points; ++pt) {
      const std::size_t site =
          static_cast<std::size_t>(site_picker.uniform() * static_cast<double>(s.grid.size()));
      const double sec = std::abs(secondary_constraint_residual(state, site)) / scale;
      out << "secondary-constraint," << st << ',' << site << ',' << fmt(sec) << ',' << fmt(1e-6)
          << ',' << (sec <= 1e-6 ? "1" : "0") << '\n';
      const double clo = constraint_chain_closure(state, {site}) / scale;
      out << "chain-closure," << st << ',' << site << ',' << fmt(clo) << ',' << fmt(1e-6) << ','
          << (clo <= 1e-6 ? "1" : "0") << '\n';
    }
  }
}

void run_fock(const Config& cfg) {
  using namespace focksu2;
  const CommonSetup s = common_setup(cfg);
  const int nmax = static_cast<int>(cfg.get_int("fock.nmax", 16));
  const double omega = cfg.get_num("fock.omega", 1.0);
  const std::vector<double> temps = cfg.get_list("fock.temps", "0.5,1.0,2.0");
  const TwoModeSpace space(nmax);

  auto out = open_output(s, "fock.csv");
  out << "kind,name,value,expected,residual,pass\n";

  const U2Generators u = u2_generators(space);
  const Eigen::MatrixXcd* a[2][2] = {{&u.a11.m, &u.a12.m}, {&u.a21.m, &u.a22.m}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(space.dimension(), space.dimension());
          if (k == j) rhs += *a[i][l];
          if (i == l) rhs -= *a[k][j];
          const Eigen::MatrixXcd lhs = (*a[i][j]) * (*a[k][l]) - (*a[k][l]) * (*a[i][j]);
          const double res = max_abs_on_safe_columns(space, lhs - rhs);
          std::ostringstream name;
          name << "[A" << i + 1 << j + 1 << ";A" << k + 1 << l + 1 << "]";
          out << "commutator," << name.str() << ",0,0," << fmt(res) << ','
              << (res <= 1e-13 ? "1" : "0") << '\n';
        }

  const OperatorMatrix h = hamiltonian_k(space, omega);
  const SU2Generators b = su2_generators(space);
  for (const auto& [name, gen] :
       {std::pair<const char*, const Eigen::MatrixXcd*>{"B11", &b.b11.m},
        std::pair<const char*, const Eigen::MatrixXcd*>{"B12", &b.b12.m},
        std::pair<const char*, const Eigen::MatrixXcd*>{"B21", &b.b21.m}}) {
    const double res = max_abs_on_safe_columns(space, h.m * (*gen) - (*gen) * h.m);
    out << "commutator,[H;" << name << "],0,0," << fmt(res) << ',' << (res <= 1e-13 ? "1" : "0")
        << '\n';
  }
  const double traceless = (b.b11.m + b.b22()).cwiseAbs().maxCoeff();
  out << "identity,B11+B22,0,0," << fmt(traceless) << ',' << (traceless == 0.0 ? "1" : "0") << '\n';

  for (int n = 0; n <= std::min(nmax - 1, 10); ++n) {
    const double j = 0.5 * n;
    const double expected = j * (j + 1.0);
    const double value = casimir_on_subspace(space, n);
    const double res = std::abs(value - expected);
    out << "casimir,n=" << n << ',' << fmt(value) << ',' << fmt(expected) << ',' << fmt(res) << ','
        << (res <= 1e-12 * std::max(1.0, expected) ? "1" : "0") << '\n';
  }

  const double hbar = cfg.get_num("phys.hbar", 1.0);
  const double kb = cfg.get_num("phys.kb", 1.0);
  for (double temp : temps) {
    const double truncated = planck_occupancy(omega, temp, std::max(nmax, 60), hbar, kb);
    const double closed = planck_closed_form(omega, temp, hbar, kb);
    out << "occupancy,T=" << fmt(temp) << ',' << fmt(truncated) << ',' << fmt(closed) << ','
        << fmt(std::abs(truncated - closed)) << ','
        << (std::abs(truncated - closed) <= 1e-10 ? "1" : "0") << '\n';
  }
}

void run_clebsch(const Config& cfg) {
  using namespace clebsch;
  const CommonSetup s = common_setup(cfg);
  const std::vector<double> h_list = cfg.get_list("clebsch.h_list", "0.4,0.2,0.1");
  const double box = cfg.get_num("clebsch.box", 8.0);
  const std::string preset = cfg.get_str("clebsch.preset", "random");
  if (preset != "random" && preset != "trig")
    throw std::invalid_argument("clebsch.preset must be 'random' or 'trig'");

  const auto triple_for = [&](const GridSpec& g) {
    if (preset == "trig") {
      const double k = 2.0 * kPi / g.length();
      return ClebschTriple{
          make_scalar_field(g, [k](Vec3 p) { return std::sin(k * p.x) * std::cos(k * p.y); }),
          make_scalar_field(g, [k](Vec3 p) { return std::sin(k * p.y) + 0.5 * std::cos(k * p.z); }),
          make_scalar_field(g, [k](Vec3 p) { return std::cos(k * (p.x + p.z)); })};
    }
    return ClebschTriple{random_smooth_scalar(g, s.seed, 1), random_smooth_scalar(g, s.seed + 1, 1),
                         random_smooth_scalar(g, s.seed + 2, 1)};
  };

  auto out = open_output(s, "clebsch.csv");
  out << "kind,h,curl_residual,div_residual\n";
  for (double h : h_list) {
    const double n_real = box / h;
    const int n = static_cast<int>(std::lround(n_real));
    if (std::abs(n_real - n) > 1e-9 || n < 4)
      throw std::invalid_argument("clebsch.h_list entries must divide the box length");
    const GridSpec g{n, box / n, 1.0};
    const ClebschTriple t = triple_for(g);
    out << "identity," << fmt(g.h) << ',' << fmt(curl_identity_residual(t)) << ','
        << fmt(div_formula_residual(t)) << '\n';
  }
}

void run_diag(const Config& cfg) {
  const CommonSetup s = common_setup(cfg);
  auto out = open_output(s, "diag.csv");
  out << "check,value\n";

  VectorFieldGrid f = random_smooth_vector(s.grid, s.seed);
  const HelmholtzParts parts = helmholtz_split(f);
  double reassembly = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Vec3 sum = parts.transverse.values[i] + parts.longitudinal.values[i] + parts.dc;
    reassembly = std::max(reassembly, norm(sum - f.values[i]));
  }
  out << "helmholtz-reassembly," << fmt(reassembly / std::max(1e-300, max_abs(f))) << '\n';
  out << "helmholtz-orthogonality,"
      << fmt(std::abs(inner(parts.transverse, parts.longitudinal)) /
             std::max(1e-300, l2_norm(parts.transverse) * l2_norm(parts.longitudinal)))
      << '\n';
  out << "projector-divergence," << fmt(relative_spectral_divergence(project_transverse(f))) << '\n';

  // appendix diagnostics
  SphericalField coulomb;
  coulomb.e_r = [](double r, double, double) { return 2.5 / (r * r); };
  coulomb.e_theta = [](double, double, double) { return 0.0; };
  coulomb.e_phi = [](double, double, double) { return 0.0; };
  GaussianStream gs(s.seed ^ 0xdecafull);
  std::vector<SphericalPoint> pts;
  for (int i = 0; i < 20; ++i)
    pts.push_back({0.5 + 4.5 * gs.uniform(), 0.3 + (kPi - 0.6) * gs.uniform(), 2.0 * kPi * gs.uniform()});
  double worst_div = 0;
  for (double d : spherical_divergence(coulomb, pts, 1e-4)) worst_div = std::max(worst_div, std::abs(d));
  out << "spherical-divergence-coulomb," << fmt(worst_div) << '\n';

  std::vector<std::pair<double, double>> samples;
  for (double r : {1.0, 2.0, 4.0, 8.0}) samples.push_back({r, 2.5 / (r * r)});
  const FalloffFit fit = radial_falloff_fit(samples);
  out << "falloff-exponent," << fmt(fit.exponent) << '\n';
  out << "falloff-amplitude," << fmt(fit.amplitude) << '\n';
}

}  // namespace emlab::cli

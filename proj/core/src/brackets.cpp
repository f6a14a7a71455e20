#include "emlab/brackets.hpp"

#include <unordered_set>

namespace emlab::brackets {
namespace {

struct SiteCoords {
  int ix, iy, iz;
};

SiteCoords coords_of(const GridSpec& g, std::size_t site) {
  const int n = g.n;
  const int iz = static_cast<int>(site % n);
  const int iy = static_cast<int>((site / n) % n);
  const int ix = static_cast<int>(site / (static_cast<std::size_t>(n) * n));
  return {ix, iy, iz};
}

std::size_t shifted(const GridSpec& g, const SiteCoords& c, int axis, int delta) {
  int ix = c.ix, iy = c.iy, iz = c.iz;
  (axis == 0 ? ix : axis == 1 ? iy : iz) += delta;
  return g.index(g.wrap(ix), g.wrap(iy), g.wrap(iz));
}

// F_{rs}(x) = D_r A_s(x) - D_s A_r(x), r,s in 1..3, axes r-1, s-1.
double f_tensor(const CanonicalLattice& s, const SiteCoords& c, int r, int sidx) {
  const GridSpec& g = s.spec;
  const double inv2h = 1.0 / (2.0 * g.h);
  const double dr_as = (s.a[sidx][shifted(g, c, r - 1, 1)] - s.a[sidx][shifted(g, c, r - 1, -1)]) * inv2h;
  const double ds_ar = (s.a[r][shifted(g, c, sidx - 1, 1)] - s.a[r][shifted(g, c, sidx - 1, -1)]) * inv2h;
  return dr_as - ds_ar;
}

double div_b(const CanonicalLattice& s, const SiteCoords& c) {
  const GridSpec& g = s.spec;
  const double inv2h = 1.0 / (2.0 * g.h);
  double d = 0;
  for (int r = 1; r <= 3; ++r)
    d += (s.b[r][shifted(g, c, r - 1, 1)] - s.b[r][shifted(g, c, r - 1, -1)]) * inv2h;
  return d;
}

double central_da(const CanonicalLattice& s, const SiteCoords& c, int mu, int axis) {
  const GridSpec& g = s.spec;
  return (s.a[mu][shifted(g, c, axis, 1)] - s.a[mu][shifted(g, c, axis, -1)]) / (2.0 * g.h);
}

}  // namespace

double CanonicalLattice::field_scale() const {
  double m = 0;
  for (const auto& comp : a)
    for (double v : comp) m = std::max(m, std::abs(v));
  for (const auto& comp : b)
    for (double v : comp) m = std::max(m, std::abs(v));
  return m;
}

double LatticeFunctional::partial(const CanonicalLattice& s, Slot slot, int mu, std::size_t site) const {
  CanonicalLattice probe = s;  // finite differences touch a private copy
  auto& values = (slot == Slot::A ? probe.a : probe.b)[mu];
  const double eps = fd_step_;
  const double orig = values[site];
  values[site] = orig + eps;
  const double fp = eval(probe);
  values[site] = orig - eps;
  const double fm = eval(probe);
  const double d = (fp - fm) / (2.0 * eps);
  if (!std::isfinite(d))
    throw std::runtime_error("LatticeFunctional: non-finite derivative in " + name());
  return d;
}

ValueFunctional::ValueFunctional(Slot slot, int mu, std::size_t site)
    : slot_(slot), mu_(mu), site_(site) {
  require(mu >= 0 && mu < 4, "ValueFunctional: mu must be in 0..3");
}

std::string ValueFunctional::name() const {
  return (slot_ == Slot::A ? "A_" : "B^") + std::to_string(mu_) + "(x" + std::to_string(site_) + ")";
}

double ValueFunctional::eval(const CanonicalLattice& s) const {
  return (slot_ == Slot::A ? s.a : s.b)[mu_][site_];
}

Support ValueFunctional::support(Slot slot) const {
  if (slot != slot_) return Support::none();
  return {false, {{mu_, site_}}};
}

double ValueFunctional::partial(const CanonicalLattice&, Slot slot, int mu, std::size_t site) const {
  return (slot == slot_ && mu == mu_ && site == site_) ? 1.0 : 0.0;
}

DivBFunctional::DivBFunctional(const GridSpec& spec, std::size_t site) : spec_(spec), site_(site) {
  spec.validate();
  require(site < spec.size(), "DivBFunctional: site out of range");
}

std::string DivBFunctional::name() const { return "divB(x" + std::to_string(site_) + ")"; }

double DivBFunctional::eval(const CanonicalLattice& s) const {
  require(s.spec == spec_, "DivBFunctional: state grid mismatch");
  return div_b(s, coords_of(spec_, site_));
}

Support DivBFunctional::support(Slot slot) const {
  if (slot == Slot::A) return Support::none();
  Support sup;
  const SiteCoords c = coords_of(spec_, site_);
  for (int r = 1; r <= 3; ++r) {
    sup.entries.push_back({r, shifted(spec_, c, r - 1, 1)});
    sup.entries.push_back({r, shifted(spec_, c, r - 1, -1)});
  }
  return sup;
}

double DivBFunctional::partial(const CanonicalLattice&, Slot slot, int mu, std::size_t site) const {
  if (slot != Slot::B || mu < 1) return 0.0;
  const SiteCoords c = coords_of(spec_, site_);
  const double inv2h = 1.0 / (2.0 * spec_.h);
  double d = 0;
  if (site == shifted(spec_, c, mu - 1, 1)) d += inv2h;
  if (site == shifted(spec_, c, mu - 1, -1)) d -= inv2h;
  return d;
}

double HamiltonianFunctional::eval(const CanonicalLattice& s) const { return hamiltonian(s); }

double HamiltonianFunctional::partial(const CanonicalLattice& s, Slot slot, int mu,
                                      std::size_t site) const {
  if (mode_ == DerivativeMode::FiniteDifference)
    return LatticeFunctional::partial(s, slot, mu, site);

  const GridSpec& g = s.spec;
  const double h3 = g.cell_volume();
  const SiteCoords c = coords_of(g, site);

  if (slot == Slot::A) {
    if (mu == 0) return -h3 * div_b(s, c);
    // dH/dA_sigma(y) = -h^3 sum_r D_r F_{r sigma}(y)
    double acc = 0;
    const double inv2h = 1.0 / (2.0 * g.h);
    for (int r = 1; r <= 3; ++r) {
      if (r == mu) continue;
      const SiteCoords cp = coords_of(g, shifted(g, c, r - 1, 1));
      const SiteCoords cm = coords_of(g, shifted(g, c, r - 1, -1));
      acc += (f_tensor(s, cp, r, mu) - f_tensor(s, cm, r, mu)) * inv2h;
    }
    return -h3 * acc;
  }
  if (mu == 0) return 0.0;
  return h3 * (s.b[mu][site] + central_da(s, c, 0, mu - 1));
}

double TotalHamiltonianFunctional::eval(const CanonicalLattice& s) const {
  return total_hamiltonian(s, v_);
}

double TotalHamiltonianFunctional::partial(const CanonicalLattice& s, Slot slot, int mu,
                                           std::size_t site) const {
  double d = HamiltonianFunctional::partial(s, slot, mu, site);
  if (slot == Slot::B && mu == 0) d += s.spec.cell_volume() * v_.values[site];
  return d;
}

double hamiltonian(const CanonicalLattice& state) {
  const GridSpec& g = state.spec;
  g.validate();
  const double h3 = g.cell_volume();
  double acc = 0;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const SiteCoords c{ix, iy, iz};
        const std::size_t idx = g.index(ix, iy, iz);
        double f2 = 0;
        for (int r = 1; r <= 3; ++r)
          for (int sidx = 1; sidx <= 3; ++sidx) {
            if (r == sidx) continue;
            const double f = f_tensor(state, c, r, sidx);
            f2 += f * f;
          }
        double b2 = 0;
        for (int r = 1; r <= 3; ++r) b2 += state.b[r][idx] * state.b[r][idx];
        acc += 0.25 * f2 + 0.5 * b2 - div_b(state, c) * state.a[0][idx];
      }
  return acc * h3;
}

double total_hamiltonian(const CanonicalLattice& state, const ScalarFieldGrid& v) {
  require(v.spec == state.spec, "total_hamiltonian: multiplier grid mismatch");
  for (double val : v.values) require(std::isfinite(val), "total_hamiltonian: multiplier must be finite");
  double acc = 0;
  for (std::size_t i = 0; i < v.values.size(); ++i) acc += v.values[i] * state.b[0][i];
  return hamiltonian(state) + acc * state.spec.cell_volume();
}

namespace {

double contract(const LatticeFunctional& f, Slot sf, const LatticeFunctional& g, Slot sg,
                const CanonicalLattice& state) {
  const Support supf = f.support(sf);
  const Support supg = g.support(sg);

  const auto term = [&](int mu, std::size_t site) {
    const double df = f.partial(state, sf, mu, site);
    if (df == 0.0) return 0.0;
    return df * g.partial(state, sg, mu, site);
  };

  double acc = 0;
  if (!supf.all && !supg.all) {
    // iterate the smaller list, membership test against the other
    const Support& small = supf.entries.size() <= supg.entries.size() ? supf : supg;
    const Support& large = supf.entries.size() <= supg.entries.size() ? supg : supf;
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(large.entries.size());
    for (const auto& e : large.entries)
      keys.insert(static_cast<std::uint64_t>(e.mu) * state.spec.size() + e.site);
    for (const auto& e : small.entries)
      if (keys.count(static_cast<std::uint64_t>(e.mu) * state.spec.size() + e.site))
        acc += term(e.mu, e.site);
  } else if (!supf.all) {
    for (const auto& e : supf.entries) acc += term(e.mu, e.site);
  } else if (!supg.all) {
    for (const auto& e : supg.entries) acc += term(e.mu, e.site);
  } else {
    for (int mu = 0; mu < 4; ++mu)
      for (std::size_t site = 0; site < state.spec.size(); ++site) acc += term(mu, site);
  }
  return acc;
}

}  // namespace

double poisson_bracket(const LatticeFunctional& f, const LatticeFunctional& g,
                       const CanonicalLattice& state) {
  state.spec.validate();
  const double ab = contract(f, Slot::A, g, Slot::B, state);
  const double ba = contract(f, Slot::B, g, Slot::A, state);
  return (ab - ba) / state.spec.cell_volume();
}

double suggested_fd_step(const CanonicalLattice& state) {
  return 1e-5 * std::max(1.0, state.field_scale());
}

double secondary_constraint_residual(const CanonicalLattice& state, std::size_t site,
                                     DerivativeMode mode) {
  require(site < state.spec.size(), "secondary_constraint_residual: site out of range");
  ValueFunctional b0(Slot::B, 0, site);
  HamiltonianFunctional h(mode);
  h.set_fd_step(suggested_fd_step(state));
  const double bracket = poisson_bracket(b0, h, state);
  DivBFunctional divb(state.spec, site);
  return bracket - divb.eval(state);
}

double constraint_chain_closure(const CanonicalLattice& state, std::vector<std::size_t> sites,
                                DerivativeMode mode) {
  if (sites.empty()) {
    const std::size_t stride = std::max<std::size_t>(1, state.spec.size() / 8);
    for (std::size_t s = 0; s < state.spec.size(); s += stride) sites.push_back(s);
  }
  HamiltonianFunctional h(mode);
  h.set_fd_step(suggested_fd_step(state));
  double worst = 0;
  for (std::size_t site : sites) {
    DivBFunctional divb(state.spec, site);
    worst = std::max(worst, std::abs(poisson_bracket(divb, h, state)));
  }
  return worst;
}

}  // namespace emlab::brackets

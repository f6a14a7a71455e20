#pragma once

#include <memory>
#include <string>

#include "emlab/grid.hpp"

namespace emlab::brackets {

// Paired generalized coordinates A_mu(x) and momenta B^mu(x) on the lattice.
// mu = 0 is the scalar slot, mu = 1..3 the spatial components.
struct CanonicalLattice {
  GridSpec spec;
  std::array<std::vector<double>, 4> a;
  std::array<std::vector<double>, 4> b;

  CanonicalLattice() = default;
  explicit CanonicalLattice(const GridSpec& s) : spec(s) {
    s.validate();
    for (auto& comp : a) comp.assign(s.size(), 0.0);
    for (auto& comp : b) comp.assign(s.size(), 0.0);
  }

  double field_scale() const;  // max |a|, |b| over all slots
};

enum class Slot { A, B };

struct SupportEntry {
  int mu = 0;
  std::size_t site = 0;
};

// Where a functional's partials may be nonzero: everywhere, or a short list.
struct Support {
  bool all = false;
  std::vector<SupportEntry> entries;

  static Support everywhere() { return {true, {}}; }
  static Support none() { return {false, {}}; }
};

// Named evaluable observable of the canonical state. Derivatives come from an
// analytic rule (override partial) or from symmetric finite differences with
// step fd_step (the default implementation, which probes a private copy).
class LatticeFunctional {
 public:
  virtual ~LatticeFunctional() = default;

  virtual std::string name() const = 0;
  virtual double eval(const CanonicalLattice& s) const = 0;
  virtual Support support(Slot slot) const { (void)slot; return Support::everywhere(); }
  virtual double partial(const CanonicalLattice& s, Slot slot, int mu, std::size_t site) const;

  double fd_step() const { return fd_step_; }
  void set_fd_step(double eps) {
    require(eps > 0, "LatticeFunctional: fd step must be positive");
    fd_step_ = eps;
  }

 private:
  double fd_step_ = 1e-5;
};

// Evaluation functional A_mu(x0) or B^mu(x0); analytic unit derivative.
class ValueFunctional final : public LatticeFunctional {
 public:
  ValueFunctional(Slot slot, int mu, std::size_t site);
  std::string name() const override;
  double eval(const CanonicalLattice& s) const override;
  Support support(Slot slot) const override;
  double partial(const CanonicalLattice& s, Slot slot, int mu, std::size_t site) const override;

 private:
  Slot slot_;
  int mu_;
  std::size_t site_;
};

// Central-difference div B at a point; analytic stencil derivatives.
class DivBFunctional final : public LatticeFunctional {
 public:
  DivBFunctional(const GridSpec& spec, std::size_t site);
  std::string name() const override;
  double eval(const CanonicalLattice& s) const override;
  Support support(Slot slot) const override;
  double partial(const CanonicalLattice& s, Slot slot, int mu, std::size_t site) const override;

 private:
  GridSpec spec_;
  std::size_t site_;
};

enum class DerivativeMode { Analytic, FiniteDifference };

// The free-field Hamiltonian: sum_x [ 1/4 F^{rs}F_{rs} + 1/2 B^r B^r
// - (B^r)_{,r} A_0 ] h^3 with F built from central differences of the
// spatial coordinates.
class HamiltonianFunctional : public LatticeFunctional {
 public:
  explicit HamiltonianFunctional(DerivativeMode mode = DerivativeMode::Analytic) : mode_(mode) {}
  std::string name() const override { return "H"; }
  double eval(const CanonicalLattice& s) const override;
  double partial(const CanonicalLattice& s, Slot slot, int mu, std::size_t site) const override;

 private:
  DerivativeMode mode_;
};

// H + sum_x v(x) B^0(x) h^3 with the multiplier v supplied by the caller
// (never chosen here).
class TotalHamiltonianFunctional final : public HamiltonianFunctional {
 public:
  TotalHamiltonianFunctional(ScalarFieldGrid v, DerivativeMode mode = DerivativeMode::Analytic)
      : HamiltonianFunctional(mode), v_(std::move(v)) {}
  std::string name() const override { return "H_T"; }
  double eval(const CanonicalLattice& s) const override;
  double partial(const CanonicalLattice& s, Slot slot, int mu, std::size_t site) const override;

 private:
  ScalarFieldGrid v_;
};

double hamiltonian(const CanonicalLattice& state);
double total_hamiltonian(const CanonicalLattice& state, const ScalarFieldGrid& v);

// Discrete Poisson bracket
//   [f, g] = (1/h^3) sum_{x,mu} [ df/dA_mu(x) dg/dB^mu(x)
//                               - df/dB^mu(x) dg/dA_mu(x) ],
// normalized so [B^mu(x), A_nu(x')] = -delta^mu_nu * delta_{xx'} / h^3
// (the discrete delta-function reading). The sum runs over the intersection
// of the declared supports, so value-functional brackets stay O(1).
double poisson_bracket(const LatticeFunctional& f, const LatticeFunctional& g,
                       const CanonicalLattice& state);

// [B^0(x0), H] minus the central-difference div B(x0); weak-equality residual
// of the secondary constraint. H derivatives use `mode` (finite differences
// by default, step 1e-5 * max(1, field scale)).
double secondary_constraint_residual(const CanonicalLattice& state, std::size_t site,
                                     DerivativeMode mode = DerivativeMode::FiniteDifference);

// max |[div B(x), H]| over the sampled points (a deterministic stride when
// none are given); zero means Dirac's chain closes with no tertiary
// constraint.
double constraint_chain_closure(const CanonicalLattice& state,
                                std::vector<std::size_t> sites = {},
                                DerivativeMode mode = DerivativeMode::FiniteDifference);

double suggested_fd_step(const CanonicalLattice& state);

}  // namespace emlab::brackets

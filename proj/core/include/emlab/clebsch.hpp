#pragma once

#include "emlab/grid.hpp"

namespace emlab::clebsch {

// Three scalars synthesizing a vector field a = phi grad(psi) + grad(chi).
// No inverse decomposition is attempted here; the forward identities are what
// gets verified.
struct ClebschTriple {
  ScalarFieldGrid phi, psi, chi;

  void validate() const {
    phi.spec.validate();
    require(phi.spec == psi.spec && phi.spec == chi.spec, "ClebschTriple: grid mismatch");
  }
};

VectorFieldGrid synthesize(const ClebschTriple& t);

// max-norm of curl(synthesize(t)) - grad(phi) x grad(psi); O(h^2).
double curl_identity_residual(const ClebschTriple& t);

// max-norm of div(synthesize(t)) - (grad phi . grad psi + phi lap psi + lap chi); O(h^2).
double div_formula_residual(const ClebschTriple& t);

// Potentials (Phi, A) sampled at >= 3 uniformly spaced times, enough for
// central second time differences.
struct PotentialSet {
  std::vector<double> times;
  std::vector<ScalarFieldGrid> phi;
  std::vector<VectorFieldGrid> a;

  void validate() const;
  double dt() const { return times[1] - times[0]; }
  std::size_t mid() const { return times.size() / 2; }
};

struct SourceResiduals {
  double rv = 0;  // vector equation: (4 pi / c) j vs potential combination
  double rs = 0;  // scalar equation: 4 pi rho vs potential combination
  double scale_v = 0;
  double scale_s = 0;
};

// Residuals of the potential-form equations at the middle time sample. The
// source of the vector equation is written rho*v in the original; it is
// treated as the given current density j. The time derivative of
// (div A + (1/c) dPhi/dt) is expanded as div(dA/dt) + (1/c) d2Phi/dt2 so three
// samples suffice.
SourceResiduals potential_source_residual(const PotentialSet& p, const ScalarFieldGrid& rho,
                                          const VectorFieldGrid& j, double c);

struct FieldInvariants {
  double s = 0;  // integral of E^2 - H^2
  double p = 0;  // integral of E . H
};

FieldInvariants field_invariants(const VectorFieldGrid& e, const VectorFieldGrid& h);

}  // namespace emlab::clebsch

#pragma once

#include "emlab/grid.hpp"

namespace emlab {

// Second-order central differences with periodic wrap. The spectral path in
// helmholtz.hpp/propagator.hpp is the independent route used wherever
// exactness matters; keeping both enables cross-validation.

ScalarFieldGrid divergence(const VectorFieldGrid& f);
VectorFieldGrid curl(const VectorFieldGrid& f);
VectorFieldGrid gradient(const ScalarFieldGrid& f);

// Compact 7-point Laplacian.
ScalarFieldGrid laplacian(const ScalarFieldGrid& f);

// A + grad(psi); curl of the output equals curl of the input within O(h^2).
VectorFieldGrid gauge_transform(const VectorFieldGrid& a, const ScalarFieldGrid& psi);

}  // namespace emlab

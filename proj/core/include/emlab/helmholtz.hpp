#pragma once

#include "emlab/fft.hpp"

namespace emlab {

// Spectral Helmholtz decomposition. The k = 0 mode carries no direction, so
// the mean of the field is returned separately and excluded from both parts.
struct HelmholtzParts {
  VectorFieldGrid transverse;
  VectorFieldGrid longitudinal;
  Vec3 dc;
};

HelmholtzParts helmholtz_split(const VectorFieldGrid& f);

// Transverse projector; idempotent. The mean (k = 0) component is kept or
// dropped per keep_dc.
VectorFieldGrid project_transverse(const VectorFieldGrid& f, bool keep_dc = true);

// max_k |k.fhat| / max_k |k||fhat| -- relative divergence in spectral norm.
double relative_spectral_divergence(const VectorFieldGrid& f);

}  // namespace emlab

#pragma once

#include "propload/common.hpp"

namespace propload::specfun {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz). Accurate to ~1e-13 for any z
// with a representable result.
cplx faddeeva_w(cplx z);

// Error function of a complex argument. Throws std::domain_error when the
// result magnitude exceeds double range (exp(y^2-x^2) overflow).
cplx erf_c(cplx z);

// Imaginary error function erfi(z) = erf(iz)/i.
cplx erfi_c(cplx z);

}  // namespace propload::specfun

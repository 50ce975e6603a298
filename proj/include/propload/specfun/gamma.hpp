#pragma once

#include "propload/common.hpp"

namespace propload::specfun {

// log Gamma(z) on the principal branch (Lanczos, g=7). Accurate to ~1e-13
// relative away from the poles at 0, -1, -2, ...
cplx lgamma_c(cplx z);

cplx gamma_c(cplx z);

// 1/Gamma(z); entire, zero at the poles of Gamma.
cplx rgamma_c(cplx z);

}  // namespace propload::specfun

#pragma once

#include <vector>

#include "propload/common.hpp"

namespace propload::specfun {

// Modified Bessel function I_nu(z) for complex order (Re(nu) > -1 in the
// series branch) and complex argument, |z| up to ~60. Power series below
// |z|=20, Hankel-type asymptotic expansion with both exponentials above.
cplx bessel_i(cplx nu, cplx z);

// Bessel function of the first kind, same machinery via J/I rotation.
cplx bessel_j(cplx nu, cplx z);

// Airy Ai, Ai' and the (negative) zeros of Ai, most negative last:
// airy_zeros(3) = {-2.33811, -4.08795, -5.52056}.
double airy_ai(double x);
double airy_ai_prime(double x);
std::vector<double> airy_zeros(int n);

}  // namespace propload::specfun

#pragma once

#include "propload/common.hpp"

namespace propload::specfun {

// Orthogonal polynomials by their standard three-term recurrences.
double hermite_h(int n, double x);                      // physicists' H_n
double laguerre_l(int n, double alpha, double x);       // generalized L_n^(a)
double jacobi_p(int n, double alpha, double beta, double x);
double legendre_p(int n, double x);
double gegenbauer_c(int n, double lambda, double x);

}  // namespace propload::specfun

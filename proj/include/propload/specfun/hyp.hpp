#pragma once

#include "propload/common.hpp"

namespace propload::specfun {

struct SeriesControl {
  int max_terms = 500;
  double rel_tol = 1e-12;
  double abs_floor = 1e-300;
};

// Confluent hypergeometric 1F1(a;b;z). Maclaurin series with the Kummer
// transformation for Re(z) < 0 and the large-|z| asymptotic expansion beyond
// |z| ~ 28. Throws on b equal to a non-positive integer.
cplx hyp1f1(cplx a, cplx b, cplx z, const SeriesControl& ctl = {});

// Gauss hypergeometric 2F1(a,b;c;z) for |z| < 1. The Pfaff transformation
// z -> z/(z-1) is applied when it shrinks the argument; values with |z| -> 1
// and non-positive-integer c-a-b would need the 1-z connection formula, which
// the callers here never require.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl = {});

}  // namespace propload::specfun

#pragma once

#include <functional>

#include "propload/common.hpp"

namespace propload::quad {

struct Result {
  cplx value{0.0, 0.0};
  double abs_error = 0.0;   // achieved error estimate
  bool converged = false;
  int panels_used = 0;
};

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_panels = 4000;   // hard budget on adaptive subdivisions
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval for complex-valued
// integrands of a real variable. Worst panel is split first.
Result integrate(const std::function<cplx(double)>& f, double a, double b,
                 const Options& opt = {});

// Semi-infinite [a, inf) via x = a + u/(1-u) on u in [0,1).
Result integrate_half_line(const std::function<cplx(double)>& f, double a,
                           const Options& opt = {});

// Whole line via two half-line integrals split at the origin.
Result integrate_real_line(const std::function<cplx(double)>& f,
                           const Options& opt = {});

}  // namespace propload::quad

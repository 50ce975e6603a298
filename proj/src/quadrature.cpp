#include "propload/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace propload::quad {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// rule. Values from the QUADPACK qk15 tables.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fc = f(c);
  cplx resk = fc * wgk[7];
  cplx resg = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    cplx f1 = f(c - h * xgk[j]);
    cplx f2 = f(c + h * xgk[j]);
    resk += wgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * h;
  p.err = std::abs(resk - resg) * h;
  return p;
}

}  // namespace

Result integrate(const std::function<cplx(double)>& f, double a, double b,
                 const Options& opt) {
  Result res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Panel> heap;
  // Seed with a few panels so a deceptive smooth-looking first panel does not
  // end adaptivity early on oscillatory integrands.
  const int seed = 8;
  cplx total = 0.0;
  double err = 0.0;
  for (int i = 0; i < seed; ++i) {
    double lo = a + (b - a) * i / seed;
    double hi = a + (b - a) * (i + 1) / seed;
    Panel p = eval_panel(f, lo, hi);
    total += p.value;
    err += p.err;
    heap.push(p);
  }
  int used = seed;
  while (used < opt.max_panels) {
    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (err <= tol) break;
    Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    err -= worst.err;
    double mid = 0.5 * (worst.a + worst.b);
    Panel l = eval_panel(f, worst.a, mid);
    Panel r = eval_panel(f, mid, worst.b);
    total += l.value + r.value;
    err += l.err + r.err;
    heap.push(l);
    heap.push(r);
    ++used;
  }
  res.value = total;
  res.abs_error = err;
  res.panels_used = used;
  res.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  return res;
}

Result integrate_half_line(const std::function<cplx(double)>& f, double a,
                           const Options& opt) {
  auto g = [&f, a](double u) -> cplx {
    double om = 1.0 - u;
    double x = a + u / om;
    double jac = 1.0 / (om * om);
    return f(x) * jac;
  };
  // Stop just short of u=1; the integrand must decay for convergence anyway.
  return integrate(g, 0.0, 1.0 - 1e-14, opt);
}

Result integrate_real_line(const std::function<cplx(double)>& f,
                           const Options& opt) {
  auto neg = integrate_half_line([&f](double x) { return f(-x); }, 0.0, opt);
  auto pos = integrate_half_line(f, 0.0, opt);
  Result res;
  res.value = neg.value + pos.value;
  res.abs_error = neg.abs_error + pos.abs_error;
  res.panels_used = neg.panels_used + pos.panels_used;
  res.converged = neg.converged && pos.converged;
  return res;
}

}  // namespace propload::quad

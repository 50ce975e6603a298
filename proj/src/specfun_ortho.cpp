#include "propload/specfun/ortho.hpp"

namespace propload::specfun {

double hermite_h(int n, double x) {
  if (n == 0) return 1.0;
  double hm = 1.0, h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

double laguerre_l(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double lm = 1.0, l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
    lm = l;
    l = next;
  }
  return l;
}

double jacobi_p(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double pm = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 1; k < n; ++k) {
    double kk = k;
    double c1 = 2.0 * (kk + 1.0) * (kk + a + b + 1.0) * (2.0 * kk + a + b);
    double c2 = (2.0 * kk + a + b + 1.0) * (a * a - b * b);
    double c3 = (2.0 * kk + a + b) * (2.0 * kk + a + b + 1.0) * (2.0 * kk + a + b + 2.0);
    double c4 = 2.0 * (kk + a) * (kk + b) * (2.0 * kk + a + b + 2.0);
    double next = ((c2 + c3 * x) * p - c4 * pm) / c1;
    pm = p;
    p = next;
  }
  return p;
}

double legendre_p(int n, double x) {
  if (n == 0) return 1.0;
  double pm = 1.0, p = x;
  for (int k = 1; k < n; ++k) {
    double next = ((2.0 * k + 1.0) * x * p - k * pm) / (k + 1.0);
    pm = p;
    p = next;
  }
  return p;
}

double gegenbauer_c(int n, double lambda, double x) {
  if (n == 0) return 1.0;
  double cm = 1.0, c = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    double next = (2.0 * x * (k + lambda) * c - (k + 2.0 * lambda - 1.0) * cm) / (k + 1.0);
    cm = c;
    c = next;
  }
  return c;
}

}  // namespace propload::specfun

#include "propload/specfun/hyp.hpp"

#include <cmath>

#include "propload/specfun/gamma.hpp"

namespace propload::specfun {
namespace {

using cldbl = std::complex<long double>;

cldbl to_ld(cplx z) { return cldbl(z.real(), z.imag()); }
cplx to_d(cldbl z) {
  return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

bool near_nonpositive_int(cplx b) {
  if (std::abs(b.imag()) > 1e-12) return false;
  double r = b.real();
  return r < 0.5 && std::abs(r - std::round(r)) < 1e-12;
}

cplx hyp1f1_series(cplx a, cplx b, cplx z, const SeriesControl& ctl) {
  cldbl al = to_ld(a), bl = to_ld(b), zl = to_ld(z);
  cldbl term(1.0L, 0.0L), sum(1.0L, 0.0L);
  int calm = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    cldbl kk(static_cast<long double>(k), 0.0L);
    term *= (al + kk) * zl / ((bl + kk) * (kk + 1.0L));
    sum += term;
    if (std::abs(term) < ctl.rel_tol * 1e-3L * std::abs(sum)) {
      if (++calm >= 2) return to_d(sum);
    } else {
      calm = 0;
    }
  }
  return to_d(sum);
}

// One branch of the |z|->inf expansion: sum_k (p)_k (q)_k / (k! x^k),
// truncated at the smallest term.
cplx asym_sum(cplx p, cplx q, cplx x) {
  cplx term = 1.0, sum = 1.0;
  double prev = 1.0;
  for (int k = 0; k < 60; ++k) {
    double kd = k;
    cplx next = term * (p + kd) * (q + kd) / ((kd + 1.0) * x);
    double mag = std::abs(next);
    if (mag > prev) break;  // asymptotic tail starts growing
    term = next;
    sum += term;
    prev = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

cplx hyp1f1_asymptotic(cplx a, cplx b, cplx z) {
  // DLMF 13.7: 1F1(a;b;z) ~ Gamma(b) [ e^z z^{a-b}/Gamma(a) S1
  //                                    + (-z)^{-a}/Gamma(b-a) S2 ]
  cplx s1 = asym_sum(b - a, 1.0 - a, z);
  cplx s2 = asym_sum(a, a - b + 1.0, -z);
  cplx t1 = std::exp(z + (a - b) * std::log(z)) * rgamma_c(a) * s1;
  cplx t2 = std::exp(-a * std::log(-z)) * rgamma_c(b - a) * s2;
  return gamma_c(b) * (t1 + t2);
}

}  // namespace

cplx hyp1f1(cplx a, cplx b, cplx z, const SeriesControl& ctl) {
  if (near_nonpositive_int(b))
    throw std::domain_error("hyp1f1: b is a non-positive integer");
  if (z == cplx(0.0, 0.0)) return 1.0;
  // Terminating polynomial case: a a non-positive integer.
  if (near_nonpositive_int(a) && a.real() > -200.0) {
    int n = static_cast<int>(-std::round(a.real()));
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
      double kd = k;
      term *= (a + kd) * z / ((b + kd) * (kd + 1.0));
      sum += term;
    }
    return sum;
  }
  if (z.real() < 0.0) {
    // Kummer: 1F1(a;b;z) = e^z 1F1(b-a;b;-z); controls cancellation.
    return std::exp(z) * hyp1f1(b - a, b, -z, ctl);
  }
  if (std::abs(z) <= 28.0) return hyp1f1_series(a, b, z, ctl);
  return hyp1f1_asymptotic(a, b, z);
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
  if (near_nonpositive_int(c))
    throw std::domain_error("hyp2f1: c is a non-positive integer");
  if (z == cplx(0.0, 0.0)) return 1.0;
  cplx zp = z / (z - 1.0);
  if (std::abs(zp) < std::abs(z) && std::abs(zp) < 1.0) {
    // Pfaff transformation.
    return std::exp(-a * std::log(1.0 - z)) * hyp2f1(a, c - b, c, zp, ctl);
  }
  if (std::abs(z) >= 1.0)
    throw std::domain_error("hyp2f1: |z| >= 1 outside supported domain");
  cldbl al = to_ld(a), bl = to_ld(b), cl = to_ld(c), zl = to_ld(z);
  cldbl term(1.0L, 0.0L), sum(1.0L, 0.0L);
  int max_terms = std::max(ctl.max_terms, std::abs(z) > 0.8 ? 4000 : 0);
  for (int k = 0; k < max_terms; ++k) {
    cldbl kk(static_cast<long double>(k), 0.0L);
    term *= (al + kk) * (bl + kk) * zl / ((cl + kk) * (kk + 1.0L));
    sum += term;
    if (std::abs(term) < ctl.rel_tol * 1e-3L * std::abs(sum)) return to_d(sum);
  }
  return to_d(sum);
}

}  // namespace propload::specfun

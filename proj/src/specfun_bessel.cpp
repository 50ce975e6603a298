#include "propload/specfun/bessel.hpp"

#include <gsl/gsl_sf_airy.h>

#include <cmath>

#include "propload/specfun/gamma.hpp"

namespace propload::specfun {
namespace {

using cldbl = std::complex<long double>;

// sum_k (z^2/4)^k / (k! Gamma(nu+k+1)), i.e. I_nu(z) / (z/2)^nu.
// Alternating variant (sign=-1) gives the J series.
cplx bessel_series_core(cplx nu, cplx z, double sign) {
  cplx q = 0.25 * z * z;
  cldbl ql(q.real(), q.imag());
  cldbl term(1.0L, 0.0L);
  cldbl sum(0.0L, 0.0L);
  cplx rg0 = rgamma_c(nu + 1.0);
  // term_k = q^k/k! ; divide by Gamma(nu+k+1) via running rational update
  cldbl g(rg0.real(), rg0.imag());  // 1/Gamma(nu+k+1)
  cldbl nul(nu.real(), nu.imag());
  for (int k = 0; k < 400; ++k) {
    cldbl add = term * g;
    sum += add;
    if (std::abs(add) < 1e-19L * std::abs(sum) && k > 2) break;
    term *= static_cast<long double>(sign) * ql / static_cast<long double>(k + 1);
    g /= (nul + static_cast<long double>(k + 1));
  }
  return cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

cplx bessel_i_series(cplx nu, cplx z) {
  cplx pref = std::exp(nu * std::log(0.5 * z));
  return pref * bessel_series_core(nu, z, +1.0);
}

cplx bessel_j_series(cplx nu, cplx z) {
  cplx pref = std::exp(nu * std::log(0.5 * z));
  return pref * bessel_series_core(nu, z, -1.0);
}

// Hankel asymptotic sum: sum_k s^k a_k(nu) / z^k with
// a_k = prod_j (4nu^2 - (2j-1)^2) / (k! 8^k), truncated at smallest term.
cplx hankel_sum(cplx nu, cplx z, double sign) {
  cplx mu = 4.0 * nu * nu;
  cplx term = 1.0, sum = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 80; ++k) {
    double tk = 2.0 * k - 1.0;
    cplx next = term * sign * (mu - tk * tk) / (8.0 * k * z);
    double mag = std::abs(next);
    if (mag > prev) break;
    term = next;
    sum += term;
    prev = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

cplx bessel_i_asymptotic(cplx nu, cplx z) {
  // DLMF 10.40.5, both exponentials kept so the anti-Stokes rays (imaginary
  // axis) stay accurate. Upper sign for Im(z) >= 0.
  cplx pref = 1.0 / std::sqrt(2.0 * PI * z);
  cplx grow = std::exp(z) * hankel_sum(nu, z, -1.0);
  double s = (z.imag() >= 0.0) ? 1.0 : -1.0;
  cplx reces = std::exp(s * (nu + 0.5) * PI * I - z) * hankel_sum(nu, z, +1.0);
  return pref * (grow + reces);
}

}  // namespace

cplx bessel_i(cplx nu, cplx z) {
  if (z == cplx(0.0, 0.0)) {
    if (std::abs(nu) < 1e-14) return 1.0;
    return nu.real() > 0.0 ? cplx(0.0, 0.0)
                           : throw std::domain_error("bessel_i: z=0, Re(nu)<=0");
  }
  if (std::abs(z) <= 20.0) return bessel_i_series(nu, z);
  return bessel_i_asymptotic(nu, z);
}

cplx bessel_j(cplx nu, cplx z) {
  if (z == cplx(0.0, 0.0)) {
    if (std::abs(nu) < 1e-14) return 1.0;
    return nu.real() > 0.0 ? cplx(0.0, 0.0)
                           : throw std::domain_error("bessel_j: z=0, Re(nu)<=0");
  }
  if (std::abs(z) <= 20.0) return bessel_j_series(nu, z);
  // J_nu(z) = e^{+nu pi i/2} I_nu(-iz)   (-pi/2 < arg z <= pi)
  //         = e^{-nu pi i/2} I_nu(+iz)   (-pi  <= arg z <= pi/2)
  if (std::arg(z) > -0.5 * PI)
    return std::exp(0.5 * nu * PI * I) * bessel_i_asymptotic(nu, -I * z);
  return std::exp(-0.5 * nu * PI * I) * bessel_i_asymptotic(nu, I * z);
}

double airy_ai(double x) { return gsl_sf_airy_Ai(x, GSL_MODE_DEFAULT); }

double airy_ai_prime(double x) { return gsl_sf_airy_Ai_deriv(x, GSL_MODE_DEFAULT); }

std::vector<double> airy_zeros(int n) {
  std::vector<double> zs(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s)
    zs[static_cast<std::size_t>(s - 1)] = gsl_sf_airy_zero_Ai(static_cast<unsigned>(s));
  return zs;
}

}  // namespace propload::specfun

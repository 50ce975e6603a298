#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "propload/analytic/analytic.hpp"
#include "propload/specfun/erf.hpp"
#include "propload/specfun/gamma.hpp"

namespace propload::analytic {
namespace {

using specfun::erf_c;
using specfun::gamma_c;
using specfun::hyp1f1;
using specfun::rgamma_c;

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

// Support hull where |psi0| >= 1e-12 * max, probed on a fine scan. Keeps the
// oscillatory quadrature off the dead tails.
std::pair<double, double> clipped_support(const InitialState& psi0) {
  double lo = std::max(psi0.support_lo(), -40.0);
  double hi = std::min(psi0.support_hi(), 40.0);
  const int n = 4001;
  double vmax = 0.0;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) {
    double y = lo + (hi - lo) * i / (n - 1);
    vals[i] = std::abs(psi0.eval(y));
    vmax = std::max(vmax, vals[i]);
  }
  double cut = 1e-12 * vmax;
  int i0 = 0, i1 = n - 1;
  while (i0 < n - 1 && vals[i0] < cut) ++i0;
  while (i1 > 0 && vals[i1] < cut) --i1;
  double a = lo + (hi - lo) * std::max(0, i0 - 1) / (n - 1);
  double b = lo + (hi - lo) * std::min(n - 1, i1 + 1) / (n - 1);
  return {a, b};
}

}  // namespace

std::vector<cplx> evolve_quadrature(const Kernel& kernel, const InitialState& psi0,
                                    cplx t, const gridpdf::Grid& grid,
                                    QuadratureReport* report, quad::Options opt) {
  if (t == cplx(0.0, 0.0))
    throw std::invalid_argument("evolve_quadrature: need t > 0");
  auto [lo, hi] = clipped_support(psi0);
  if (kernel.kind == KernelKind::Box) {
    lo = std::max(lo, -kernel.box_b);
    hi = std::min(hi, kernel.box_b);
  }
  if (kernel.kind == KernelKind::FreeHalfLine || kernel.kind == KernelKind::Radial)
    lo = std::max(lo, 0.0);

  const std::size_t M = grid.size();
  std::vector<cplx> out(M);
  std::vector<double> errs(M, 0.0);
  std::vector<char> ok(M, 1);
  parallel_for(M, [&](std::size_t i) {
    const double x = grid.point(i);
    auto f = [&](double y) { return kernel.eval(x, y, t) * psi0.eval(y); };
    quad::Result r = quad::integrate(f, lo, hi, opt);
    out[i] = r.value;
    errs[i] = r.abs_error;
    ok[i] = r.converged ? 1 : 0;
  });
  if (report) {
    report->converged = std::all_of(ok.begin(), ok.end(), [](char c) { return c; });
    report->worst_error = *std::max_element(errs.begin(), errs.end());
  }
  return out;
}

cplx gauss_power_integral(cplx w, cplx A, cplx beta) {
  cplx sqrtA = std::sqrt(A);
  cplx z = beta * beta / (4.0 * A);
  cplx t1 = sqrtA * gamma_c(0.5 * w) * hyp1f1(0.5 * w, cplx(0.5, 0.0), z);
  cplx t2 = beta * gamma_c(0.5 * (w + 1.0)) * hyp1f1(0.5 * (w + 1.0), cplx(1.5, 0.0), z);
  return 0.5 * std::exp(-0.5 * (w + 1.0) * std::log(A)) * (t1 - t2);
}

cplx gauss_bessel_integral(cplx s, cplx A, cplx g, cplx lambda) {
  cplx half_sl = 0.5 * (s + lambda);
  cplx pref = gamma_c(half_sl) * std::exp(lambda * std::log(0.5 * g)) *
              std::exp(-half_sl * std::log(A)) * 0.5 * rgamma_c(lambda + 1.0);
  return pref * hyp1f1(half_sl, lambda + 1.0, g * g / (4.0 * A));
}

cplx upsilon_lemma(cplx alpha, cplx beta, cplx gamma, cplx lambda, cplx s,
                   int n_max, double rel_tol) {
  // Upsilon = sum_k (gamma/2)^{lambda+2k} / (k! Gamma(lambda+k+1))
  //           * F(s + lambda + 2k; alpha, beta)
  // from expanding I_lambda termwise against the Gamma-type integral.
  cplx g2 = 0.5 * gamma;
  cplx coeff = std::exp(lambda * std::log(g2)) * rgamma_c(lambda + 1.0);
  cplx sum = 0.0;
  double peak = 0.0;
  for (int k = 0; k < n_max; ++k) {
    cplx w = s + lambda + 2.0 * static_cast<double>(k);
    cplx term = coeff * gauss_power_integral(w, alpha, beta);
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw std::runtime_error("upsilon_lemma: term overflow before convergence");
    sum += term;
    double mag = std::abs(term);
    peak = std::max(peak, mag);
    if (k > 2 && mag < rel_tol * std::abs(sum) && mag < peak) return sum;
    coeff *= g2 * g2 / (static_cast<double>(k + 1) * (lambda + static_cast<double>(k + 1)));
  }
  throw std::runtime_error("upsilon_lemma: series did not converge within n_max");
}

bool closed_form_supported(const Potential& pot, const InitialState& psi0) {
  using PK = Potential::Kind;
  switch (pot.kind) {
    case PK::Harmonic:
      return psi0.kind == InitKind::PiecewiseConst || psi0.kind == InitKind::GaussShift;
    case PK::Free:
      return psi0.kind == InitKind::GaussPow && is_integer(psi0.b);
    case PK::FreeHalfLine:
      return psi0.kind == InitKind::GaussPowHalf;
    case PK::Radial:
      return psi0.kind == InitKind::GaussPowHalf || psi0.kind == InitKind::GammaExp;
    case PK::Linear:
      return psi0.kind == InitKind::GammaExp;
    case PK::Box:
      return psi0.kind == InitKind::TruncGauss;
    case PK::Delta:
      return true;  // the bound state itself; initial state ignored
  }
  return false;
}

std::vector<cplx> closed_form(const Potential& pot, const InitialState& psi0,
                              double t, const gridpdf::Grid& grid) {
  if (!closed_form_supported(pot, psi0))
    throw std::invalid_argument("closed_form: unsupported (potential, initial) pair");
  const double m = pot.consts.mass, hbar = pot.consts.hbar;
  const std::size_t M = grid.size();
  std::vector<cplx> out(M);

  if (t == 0.0 && pot.kind != Potential::Kind::Delta) {
    for (std::size_t i = 0; i < M; ++i) out[i] = psi0.eval(grid.point(i));
    return out;
  }

  switch (pot.kind) {
    case Potential::Kind::Harmonic: {
      const double w = pot.omega, theta = w * t;
      if (psi0.kind == InitKind::GaussShift) {
        // evolved coherent packet; |psi|^2 = N(x0 cos wt, sqrt(hbar/2mw))
        if (std::abs(psi0.omega - w) > 1e-12)
          throw std::invalid_argument("closed_form: GaussShift width must match omega");
        for (std::size_t i = 0; i < M; ++i) {
          double x = grid.point(i);
          double gauss = -0.5 * m * w / hbar * sq(x - psi0.x0 * std::cos(theta));
          double phase = 0.5 * theta +
                         m * w / hbar * psi0.x0 * x * std::sin(theta) -
                         0.25 * m * w / hbar * psi0.x0 * psi0.x0 * std::sin(2.0 * theta);
          out[i] = std::pow(m * w / (PI * hbar), 0.25) *
                   std::exp(cplx(gauss, -phase));
        }
        return out;
      }
      // piecewise-constant ladder against the oscillator kernel: each segment
      // integrates to a pair of erf terms.
      double st = std::sin(theta), ct = std::cos(theta);
      if (std::abs(st) < 1e-3 || std::abs(ct) < 1e-3)
        throw std::domain_error("closed_form: harmonic evaluation too close to a caustic");
      double gma = 0.5 * m * w / (hbar * st);
      cplx s = -I * gma * ct;
      cplx sqrt_s = std::sqrt(s);
      cplx C = std::sqrt(m * w / (2.0 * PI * hbar * I * st));
      cplx pref = C * std::sqrt(PI) / (2.0 * sqrt_s);
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        cplx acc = 0.0;
        for (const auto& seg : psi0.segments) {
          cplx e_hi = erf_c(sqrt_s * (seg.hi - x / ct));
          cplx e_lo = erf_c(sqrt_s * (seg.lo - x / ct));
          acc += seg.value * (e_hi - e_lo);
        }
        out[i] = pref * std::exp(-I * (0.5 * m * w / hbar) * std::tan(theta) * sq(x)) * acc;
      }
      return out;
    }
    case Potential::Kind::Free: {
      const double a = psi0.a, b = psi0.b;
      double n2 = std::pow(2.0, b + 0.5) * std::pow(a, b - 0.5) /
                  (2.0 * std::tgamma(b - 0.5));
      double nr = std::sqrt(n2);
      cplx A(a, -0.5 * m / (hbar * t));
      cplx pref = nr * std::sqrt(m / (2.0 * PI * hbar * I * t));
      double parity = (static_cast<long long>(std::llround(b)) - 1) % 2 == 0 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        cplx beta = I * m * x / (hbar * t);
        cplx integral = gauss_power_integral(b, A, beta) +
                        parity * gauss_power_integral(b, A, -beta);
        out[i] = pref * std::exp(I * m * x * x / (2.0 * hbar * t)) * integral;
      }
      return out;
    }
    case Potential::Kind::FreeHalfLine: {
      const double a = psi0.a, b = psi0.b;
      double n2 = std::pow(2.0, b + 0.5) * std::pow(a, b - 0.5) / std::tgamma(b - 0.5);
      double nh = std::sqrt(n2);
      cplx A(a, -0.5 * m / (hbar * t));
      cplx pref = nh * std::sqrt(m / (2.0 * PI * hbar * I * t));
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        if (x <= 0.0) {
          out[i] = 0.0;
          continue;
        }
        cplx beta = I * m * x / (hbar * t);
        cplx integral = gauss_power_integral(b, A, beta) -
                        gauss_power_integral(b, A, -beta);
        out[i] = pref * std::exp(I * m * x * x / (2.0 * hbar * t)) * integral;
      }
      return out;
    }
    case Potential::Kind::Radial: {
      const double w = pot.omega, lam = pot.lambda, theta = w * t;
      double st = std::sin(theta);
      if (std::abs(st) < 1e-3)
        throw std::domain_error("closed_form: radial evaluation too close to a caustic");
      double cot = std::cos(theta) / st;
      cplx kpref = m * w / (I * hbar * st);
      cplx A = -I * m * w * cot / (2.0 * hbar);  // kernel quadratic coefficient
      if (psi0.kind == InitKind::GaussPowHalf) {
        const double a = psi0.a, b = psi0.b;
        double nh = std::sqrt(std::pow(2.0, b + 0.5) * std::pow(a, b - 0.5) /
                              std::tgamma(b - 0.5));
        cplx Atot = A + a;
        for (std::size_t i = 0; i < M; ++i) {
          double x = grid.point(i);
          if (x <= 0.0) {
            out[i] = 0.0;
            continue;
          }
          cplx g = -I * m * w * x / (hbar * st);
          out[i] = kpref * std::sqrt(x) *
                   std::exp(I * m * w * cot * x * x / (2.0 * hbar)) * nh *
                   gauss_bessel_integral(b + 0.5, Atot, g, lam);
        }
        return out;
      }
      // Gamma-type initial state: the Upsilon series does the integral.
      const double a = psi0.a, b = psi0.b;
      double ng = std::sqrt(std::pow(2.0 * a, 2.0 * b - 1.0) / std::tgamma(2.0 * b - 1.0));
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        if (x <= 0.0) {
          out[i] = 0.0;
          continue;
        }
        cplx g = -I * m * w * x / (hbar * st);
        out[i] = kpref * std::sqrt(x) *
                 std::exp(I * m * w * cot * x * x / (2.0 * hbar)) * ng *
                 upsilon_lemma(A, a, g, lam, b + 0.5);
      }
      return out;
    }
    case Potential::Kind::Linear: {
      const double k = pot.slope, a = psi0.a, b = psi0.b;
      double ng = std::sqrt(std::pow(2.0 * a, 2.0 * b - 1.0) / std::tgamma(2.0 * b - 1.0));
      cplx A(0.0, -0.5 * m / (hbar * t));
      cplx pref = ng * std::sqrt(m / (2.0 * PI * hbar * I * t));
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        cplx B(a, m * x / (hbar * t) + 0.5 * k * t / hbar);
        double phase = (0.5 * m * x * x / t - 0.5 * k * t * x -
                        k * k * t * t * t / (24.0 * m)) /
                       hbar;
        out[i] = pref * std::exp(I * phase) * gauss_power_integral(b, A, B);
      }
      return out;
    }
    case Potential::Kind::Box: {
      const double bb = pot.box_b;
      if (std::abs(psi0.b - bb) > 1e-12)
        throw std::invalid_argument("closed_form: TruncGauss width must match the box");
      double norm = std::pow(2.0 / PI, 0.25) / std::sqrt(std::erf(std::sqrt(2.0) * bb));
      double wfac = 0.5 * PI / bb;
      std::vector<cplx> coeff;
      for (int n = 1; n <= 400; ++n) {
        double sn = std::sin(0.5 * PI * n);  // kills even n
        double damp = std::exp(-PI * PI * n * n / (16.0 * bb * bb));
        if (damp < 1e-18) break;
        cplx edge = erf_c(cplx(bb, -PI * n / (4.0 * bb))) +
                    erf_c(cplx(bb, PI * n / (4.0 * bb)));
        cplx time_phase =
            std::exp(-I * hbar * t * PI * PI * static_cast<double>(n) *
                     static_cast<double>(n) / (8.0 * m * bb * bb));
        coeff.push_back(sn * damp * edge * time_phase);
      }
      cplx pref = std::sqrt(PI) / (2.0 * bb) * norm;
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        if (std::abs(x) >= bb) {
          out[i] = 0.0;
          continue;
        }
        cplx acc = 0.0;
        for (std::size_t n = 0; n < coeff.size(); ++n)
          acc += coeff[n] * std::sin(static_cast<double>(n + 1) * wfac * (x + bb));
        out[i] = pref * acc;
      }
      return out;
    }
    case Potential::Kind::Delta: {
      const double a = pot.delta_a;
      const double kap = m * a / (hbar * hbar);
      const double E = -0.5 * m * a * a / (hbar * hbar);
      cplx phase = std::exp(-I * E * t / hbar);
      for (std::size_t i = 0; i < M; ++i) {
        double x = grid.point(i);
        out[i] = std::sqrt(m * a) / hbar * std::exp(-kap * std::abs(x)) * phase;
      }
      return out;
    }
  }
  throw std::logic_error("closed_form: unreachable");
}

}  // namespace propload::analytic

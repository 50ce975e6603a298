#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "propload/common.hpp"
#include "propload/gridpdf/grid.hpp"
#include "propload/quadrature.hpp"
#include "propload/specfun/hyp.hpp"

namespace propload::analytic {

// ---------------------------------------------------------------------------
// Closed-form Feynman kernels K(x, y; t). Complex time is allowed; giving t a
// small negative imaginary part damps the Fresnel oscillations, which the
// composition oracles rely on.
// ---------------------------------------------------------------------------
enum class KernelKind { Free, FreeHalfLine, Box, Harmonic, Radial, Linear };

struct Kernel {
  KernelKind kind = KernelKind::Free;
  PhysConsts consts;
  double omega = 1.0;    // Harmonic / Radial
  double lambda = 0.5;   // Radial Bessel order
  double box_b = 1.0;    // Box half-width
  double slope = 1.0;    // Linear force k
  int box_terms = 200;   // Box series truncation
  double caustic_tol = 1e-3;  // reject |sin(w t)| below this

  static Kernel free_line(PhysConsts pc = {});
  static Kernel free_half_line(PhysConsts pc = {});
  static Kernel box(double b, int terms = 200, PhysConsts pc = {});
  static Kernel harmonic(double omega, PhysConsts pc = {});
  static Kernel radial(double omega, double lambda, PhysConsts pc = {});
  static Kernel linear(double k, PhysConsts pc = {});

  cplx eval(double x, double y, cplx t) const;
};

// ---------------------------------------------------------------------------
// Initial wave functions used throughout the catalog, all L2-normalized.
// ---------------------------------------------------------------------------
enum class InitKind {
  GaussPow,      // N e^{-a y^2} y^{b-1} on R
  GaussPowHalf,  // N e^{-a y^2} y^{b-1} on (0, inf)
  GammaExp,      // N e^{-a y} y^{b-1} on (0, inf)
  PiecewiseConst,
  TruncGauss,    // N e^{-y^2} on (-b, b)
  Triangular,    // well ramp on (0, a)
  SinePi,        // N sin(pi y) on (0, pi/2)
  CoulombGamma,  // (2/sqrt 3) y^2 e^{-y}
  GaussShift,    // QHO coherent packet centered x0
};

struct PiecewiseSegment {
  double lo, hi, value;
};

struct InitialState {
  InitKind kind = InitKind::GaussPow;
  double a = 1.0, b = 1.0;
  double x0 = 0.0;
  double omega = 1.0;  // GaussShift width parameter
  PhysConsts consts;
  std::vector<PiecewiseSegment> segments;

  static InitialState gauss_pow(double a, double b, PhysConsts pc = {});
  static InitialState gauss_pow_half(double a, double b, PhysConsts pc = {});
  static InitialState gamma_exp(double a, double b, PhysConsts pc = {});
  static InitialState plateau();    // 1/sqrt 2 on [-1, 1]
  static InitialState four_level(); // 1/4, sqrt7/4, 1/4 on [-2,-1],[-1,1],[1,2]
  static InitialState piecewise(std::vector<PiecewiseSegment> segs);
  static InitialState trunc_gauss(double b);
  static InitialState triangular(double a);
  static InitialState sine_pi();
  static InitialState coulomb_gamma();
  static InitialState gauss_shift(double x0, double omega, PhysConsts pc = {});

  double eval(double y) const;
  // support bounds for quadrature ([lo, hi]; +-inf encoded with huge values)
  double support_lo() const;
  double support_hi() const;
  // numerical L2 norm over the support (validation: should be 1 within 1e-8)
  double l2_norm() const;
};

// ---------------------------------------------------------------------------
// Potentials the analytic engine recognizes (the Delta case carries its own
// stationary bound state, so it needs no kernel).
// ---------------------------------------------------------------------------
struct Potential {
  enum class Kind { Free, FreeHalfLine, Box, Harmonic, Radial, Linear, Delta };
  Kind kind = Kind::Free;
  PhysConsts consts;
  double omega = 1.0, lambda = 0.5;
  double box_b = 1.0;
  double slope = 1.0;
  double delta_a = 1.0;

  static Potential free_line(PhysConsts pc = {});
  static Potential free_half_line(PhysConsts pc = {});
  static Potential box(double b, PhysConsts pc = {});
  static Potential harmonic(double omega, PhysConsts pc = {});
  static Potential radial(double omega, double lambda, PhysConsts pc = {});
  static Potential linear(double k, PhysConsts pc = {});
  static Potential delta_well(double a, PhysConsts pc = {});

  Kernel kernel() const;  // throws for Delta
};

// ---------------------------------------------------------------------------
// Evolution engines
// ---------------------------------------------------------------------------
struct QuadratureReport {
  bool converged = true;
  double worst_error = 0.0;  // largest per-point quadrature error estimate
};

// psi(x_i, t) by adaptive quadrature of the kernel against psi0. Integrand
// tails are truncated where |psi0| < 1e-12.
std::vector<cplx> evolve_quadrature(const Kernel& kernel, const InitialState& psi0,
                                    cplx t, const gridpdf::Grid& grid,
                                    QuadratureReport* report = nullptr,
                                    quad::Options opt = {1e-9, 1e-13, 20000});

// Closed-form evaluation for the solved (potential, initial state) pairs.
// Throws std::invalid_argument for unsupported pairs.
std::vector<cplx> closed_form(const Potential& pot, const InitialState& psi0,
                              double t, const gridpdf::Grid& grid);

bool closed_form_supported(const Potential& pot, const InitialState& psi0);

// Gamma-type integral F(w; A, beta) = int_0^inf e^{-A y^2 - beta y} y^{w-1} dy
// via the two-term 1F1 bracket (Re A >= 0, principal branches).
cplx gauss_power_integral(cplx w, cplx A, cplx beta);

// int_0^inf e^{-A y^2} y^{s-1} I_lambda(g y) dy, single-1F1 closed form.
cplx gauss_bessel_integral(cplx s, cplx A, cplx g, cplx lambda);

// Upsilon(alpha, beta, gamma, lambda, s) = int_0^inf e^{-alpha y^2 - beta y}
// I_lambda(gamma y) y^{s-1} dy as a power series of gauss_power_integral
// brackets. Converges when the Bessel growth is dominated; throws on
// non-convergence within n_max terms.
cplx upsilon_lemma(cplx alpha, cplx beta, cplx gamma, cplx lambda, cplx s,
                   int n_max = 200, double rel_tol = 1e-12);

}  // namespace propload::analytic

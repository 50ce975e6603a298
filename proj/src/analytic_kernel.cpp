#include <cmath>
#include <stdexcept>

#include "propload/analytic/analytic.hpp"
#include "propload/specfun/bessel.hpp"

namespace propload::analytic {

Kernel Kernel::free_line(PhysConsts pc) {
  Kernel k;
  k.kind = KernelKind::Free;
  k.consts = pc;
  return k;
}

Kernel Kernel::free_half_line(PhysConsts pc) {
  Kernel k;
  k.kind = KernelKind::FreeHalfLine;
  k.consts = pc;
  return k;
}

Kernel Kernel::box(double b, int terms, PhysConsts pc) {
  Kernel k;
  k.kind = KernelKind::Box;
  k.box_b = b;
  k.box_terms = terms;
  k.consts = pc;
  return k;
}

Kernel Kernel::harmonic(double omega, PhysConsts pc) {
  Kernel k;
  k.kind = KernelKind::Harmonic;
  k.omega = omega;
  k.consts = pc;
  return k;
}

Kernel Kernel::radial(double omega, double lambda, PhysConsts pc) {
  Kernel k;
  k.kind = KernelKind::Radial;
  k.omega = omega;
  k.lambda = lambda;
  k.consts = pc;
  return k;
}

Kernel Kernel::linear(double k_slope, PhysConsts pc) {
  Kernel k;
  k.kind = KernelKind::Linear;
  k.slope = k_slope;
  k.consts = pc;
  return k;
}

cplx Kernel::eval(double x, double y, cplx t) const {
  const double m = consts.mass, hbar = consts.hbar;
  const cplx iht = I * hbar * t;
  switch (kind) {
    case KernelKind::Free: {
      return std::sqrt(m / (2.0 * PI * hbar * I * t)) *
             std::exp(I * m * sq(x - y) / (2.0 * hbar * t));
    }
    case KernelKind::FreeHalfLine: {
      if (x <= 0.0 || y <= 0.0) return 0.0;
      cplx arg = m * x * y / iht;
      return m * std::sqrt(x * y) / iht *
             std::exp(I * m * (x * x + y * y) / (2.0 * hbar * t)) *
             specfun::bessel_i(cplx(0.5, 0.0), arg);
    }
    case KernelKind::Box: {
      if (std::abs(x) >= box_b || std::abs(y) >= box_b) return 0.0;
      cplx sum = 0.0;
      const double w = 0.5 * PI / box_b;
      for (int n = 1; n <= box_terms; ++n) {
        cplx term = std::sin(n * w * (x + box_b)) * std::sin(n * w * (y + box_b)) *
                    std::exp(-I * hbar * t * PI * PI * static_cast<double>(n) *
                             static_cast<double>(n) / (8.0 * m * box_b * box_b));
        sum += term;
        // spectral cutoff once the damped terms are negligible
        if (t.imag() < 0.0 && std::abs(term) < 1e-15 * std::abs(sum) && n > 8) break;
      }
      return sum / box_b;
    }
    case KernelKind::Harmonic: {
      cplx st = std::sin(omega * t);
      if (std::abs(st) < caustic_tol)
        throw std::domain_error("harmonic kernel: evaluation too close to a caustic");
      cplx ct = std::cos(omega * t);
      return std::sqrt(m * omega / (2.0 * PI * hbar * I * st)) *
             std::exp(I * m * omega / (2.0 * hbar * st) *
                      ((x * x + y * y) * ct - 2.0 * x * y));
    }
    case KernelKind::Radial: {
      if (x <= 0.0 || y <= 0.0) return 0.0;
      cplx st = std::sin(omega * t);
      if (std::abs(st) < caustic_tol)
        throw std::domain_error("radial kernel: evaluation too close to a caustic");
      cplx cot = std::cos(omega * t) / st;
      cplx arg = m * omega * x * y / (I * hbar * st);
      return m * omega * std::sqrt(x * y) / (I * hbar * st) *
             std::exp(-m * omega / (2.0 * I * hbar) * (x * x + y * y) * cot) *
             specfun::bessel_i(cplx(lambda, 0.0), arg);
    }
    case KernelKind::Linear: {
      return std::sqrt(m / (2.0 * PI * hbar * I * t)) *
             std::exp(I / hbar *
                      (0.5 * m * sq(x - y) / t - 0.5 * slope * t * (x + y) -
                       slope * slope * t * t * t / (24.0 * m)));
    }
  }
  throw std::logic_error("Kernel::eval: unreachable");
}

Potential Potential::free_line(PhysConsts pc) {
  Potential p;
  p.kind = Kind::Free;
  p.consts = pc;
  return p;
}

Potential Potential::free_half_line(PhysConsts pc) {
  Potential p;
  p.kind = Kind::FreeHalfLine;
  p.consts = pc;
  return p;
}

Potential Potential::box(double b, PhysConsts pc) {
  Potential p;
  p.kind = Kind::Box;
  p.box_b = b;
  p.consts = pc;
  return p;
}

Potential Potential::harmonic(double omega, PhysConsts pc) {
  Potential p;
  p.kind = Kind::Harmonic;
  p.omega = omega;
  p.consts = pc;
  return p;
}

Potential Potential::radial(double omega, double lambda, PhysConsts pc) {
  Potential p;
  p.kind = Kind::Radial;
  p.omega = omega;
  p.lambda = lambda;
  p.consts = pc;
  return p;
}

Potential Potential::linear(double k, PhysConsts pc) {
  Potential p;
  p.kind = Kind::Linear;
  p.slope = k;
  p.consts = pc;
  return p;
}

Potential Potential::delta_well(double a, PhysConsts pc) {
  Potential p;
  p.kind = Kind::Delta;
  p.delta_a = a;
  p.consts = pc;
  return p;
}

Kernel Potential::kernel() const {
  switch (kind) {
    case Kind::Free:
      return Kernel::free_line(consts);
    case Kind::FreeHalfLine:
      return Kernel::free_half_line(consts);
    case Kind::Box:
      return Kernel::box(box_b, 200, consts);
    case Kind::Harmonic:
      return Kernel::harmonic(omega, consts);
    case Kind::Radial:
      return Kernel::radial(omega, lambda, consts);
    case Kind::Linear:
      return Kernel::linear(slope, consts);
    case Kind::Delta:
      throw std::invalid_argument("delta potential has no closed-form kernel here");
  }
  throw std::logic_error("Potential::kernel: unreachable");
}

}  // namespace propload::analytic

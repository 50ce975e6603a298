#include <cmath>
#include <stdexcept>

#include "propload/analytic/analytic.hpp"

namespace propload::analytic {
namespace {
constexpr double KINF = 1e30;
}

InitialState InitialState::gauss_pow(double a, double b, PhysConsts pc) {
  if (!(a > 0.0) || !(b > 0.5))
    throw std::invalid_argument("gauss_pow: need a > 0, b > 1/2");
  InitialState s;
  s.kind = InitKind::GaussPow;
  s.a = a;
  s.b = b;
  s.consts = pc;
  return s;
}

InitialState InitialState::gauss_pow_half(double a, double b, PhysConsts pc) {
  InitialState s = gauss_pow(a, b, pc);
  s.kind = InitKind::GaussPowHalf;
  return s;
}

InitialState InitialState::gamma_exp(double a, double b, PhysConsts pc) {
  if (!(a > 0.0) || !(b > 0.5))
    throw std::invalid_argument("gamma_exp: need a > 0, b > 1/2");
  InitialState s;
  s.kind = InitKind::GammaExp;
  s.a = a;
  s.b = b;
  s.consts = pc;
  return s;
}

InitialState InitialState::plateau() {
  return piecewise({{-1.0, 1.0, 1.0 / std::sqrt(2.0)}});
}

InitialState InitialState::four_level() {
  const double r7 = std::sqrt(7.0);
  return piecewise({{-2.0, -1.0, 0.25}, {-1.0, 1.0, 0.25 * r7}, {1.0, 2.0, 0.25}});
}

InitialState InitialState::piecewise(std::vector<PiecewiseSegment> segs) {
  if (segs.empty()) throw std::invalid_argument("piecewise: no segments");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (!(segs[i].hi > segs[i].lo))
      throw std::invalid_argument("piecewise: segment bounds out of order");
    if (i > 0 && segs[i].lo < segs[i - 1].hi)
      throw std::invalid_argument("piecewise: overlapping segments");
  }
  InitialState s;
  s.kind = InitKind::PiecewiseConst;
  s.segments = std::move(segs);
  return s;
}

InitialState InitialState::trunc_gauss(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("trunc_gauss: need b > 0");
  InitialState s;
  s.kind = InitKind::TruncGauss;
  s.b = b;
  return s;
}

InitialState InitialState::triangular(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("triangular: need a > 0");
  InitialState s;
  s.kind = InitKind::Triangular;
  s.a = a;
  return s;
}

InitialState InitialState::sine_pi() {
  InitialState s;
  s.kind = InitKind::SinePi;
  return s;
}

InitialState InitialState::coulomb_gamma() {
  InitialState s;
  s.kind = InitKind::CoulombGamma;
  return s;
}

InitialState InitialState::gauss_shift(double x0, double omega, PhysConsts pc) {
  if (!(omega > 0.0)) throw std::invalid_argument("gauss_shift: need omega > 0");
  InitialState s;
  s.kind = InitKind::GaussShift;
  s.x0 = x0;
  s.omega = omega;
  s.consts = pc;
  return s;
}

double InitialState::eval(double y) const {
  switch (kind) {
    case InitKind::GaussPow: {
      // full-line variant assumes integer b (degrees-of-freedom reading)
      int n = static_cast<int>(std::lround(b)) - 1;
      double norm2 = std::pow(2.0, b + 0.5) * std::pow(a, b - 0.5) /
                     (2.0 * std::tgamma(b - 0.5));
      double pw = 1.0;
      for (int i = 0; i < n; ++i) pw *= y;
      return std::sqrt(norm2) * std::exp(-a * y * y) * pw;
    }
    case InitKind::GaussPowHalf: {
      if (y <= 0.0) return 0.0;
      double norm2 = std::pow(2.0, b + 0.5) * std::pow(a, b - 0.5) /
                     std::tgamma(b - 0.5);
      return std::sqrt(norm2) * std::exp(-a * y * y) * std::pow(y, b - 1.0);
    }
    case InitKind::GammaExp: {
      if (y <= 0.0) return 0.0;
      double norm2 = std::pow(2.0 * a, 2.0 * b - 1.0) / std::tgamma(2.0 * b - 1.0);
      return std::sqrt(norm2) * std::exp(-a * y) * std::pow(y, b - 1.0);
    }
    case InitKind::PiecewiseConst: {
      for (const auto& seg : segments)
        if (y >= seg.lo && y <= seg.hi) return seg.value;
      return 0.0;
    }
    case InitKind::TruncGauss: {
      if (std::abs(y) >= b) return 0.0;
      double norm = std::pow(2.0 / PI, 0.25) /
                    std::sqrt(std::erf(std::sqrt(2.0) * b));
      return norm * std::exp(-y * y);
    }
    case InitKind::Triangular: {
      if (y <= 0.0 || y >= a) return 0.0;
      double c = 2.0 * std::sqrt(3.0) / std::pow(a, 1.5);
      return y <= 0.5 * a ? c * y : c * (a - y);
    }
    case InitKind::SinePi: {
      if (y <= 0.0 || y >= 0.5 * PI) return 0.0;
      return 2.0 * std::sqrt(PI / (PI * PI - std::sin(PI * PI))) * std::sin(PI * y);
    }
    case InitKind::CoulombGamma: {
      if (y <= 0.0) return 0.0;
      return 2.0 / std::sqrt(3.0) * y * y * std::exp(-y);
    }
    case InitKind::GaussShift: {
      double mw = consts.mass * omega / consts.hbar;
      return std::pow(mw / PI, 0.25) * std::exp(-0.5 * mw * sq(y - x0));
    }
  }
  return 0.0;
}

double InitialState::support_lo() const {
  switch (kind) {
    case InitKind::GaussPow:
    case InitKind::GaussShift:
      return -KINF;
    case InitKind::PiecewiseConst:
      return segments.front().lo;
    case InitKind::TruncGauss:
      return -b;
    default:
      return 0.0;
  }
}

double InitialState::support_hi() const {
  switch (kind) {
    case InitKind::PiecewiseConst:
      return segments.back().hi;
    case InitKind::TruncGauss:
      return b;
    case InitKind::Triangular:
      return a;
    case InitKind::SinePi:
      return 0.5 * PI;
    default:
      return KINF;
  }
}

double InitialState::l2_norm() const {
  auto f = [this](double y) -> cplx {
    double v = eval(y);
    return cplx(v * v, 0.0);
  };
  double lo = support_lo(), hi = support_hi();
  quad::Options opt;
  opt.rel_tol = 1e-11;
  quad::Result r;
  if (lo <= -KINF && hi >= KINF) {
    r = quad::integrate_real_line(f, opt);
  } else if (hi >= KINF) {
    r = quad::integrate_half_line(f, lo, opt);
  } else {
    r = quad::integrate(f, lo, hi, opt);
  }
  return std::sqrt(r.value.real());
}

}  // namespace propload::analytic

#include "propload/gridpdf/target_pdf.hpp"

#include <cmath>
#include <stdexcept>

namespace propload::gridpdf {

TargetPdf TargetPdf::normal(double mu, double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("normal: sigma must be positive");
  TargetPdf t;
  t.kind = PdfKind::Normal;
  t.mu = mu;
  t.sigma = sigma;
  return t;
}

TargetPdf TargetPdf::lognormal(double mu, double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("lognormal: sigma must be positive");
  TargetPdf t;
  t.kind = PdfKind::LogNormal;
  t.mu = mu;
  t.sigma = sigma;
  return t;
}

TargetPdf TargetPdf::chi(int k) {
  if (k < 1) throw std::invalid_argument("chi: k must be >= 1");
  TargetPdf t;
  t.kind = PdfKind::Chi;
  t.k = k;
  return t;
}

TargetPdf TargetPdf::maxwell() {
  TargetPdf t = chi(3);
  t.kind = PdfKind::MaxwellBoltzmann;
  return t;
}

TargetPdf TargetPdf::laplace(double mu, double b) {
  if (b <= 0.0) throw std::invalid_argument("laplace: b must be positive");
  TargetPdf t;
  t.kind = PdfKind::Laplace;
  t.mu = mu;
  t.b = b;
  return t;
}

TargetPdf TargetPdf::uniform(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("uniform: need hi > lo");
  TargetPdf t;
  t.kind = PdfKind::Uniform;
  t.lo = lo;
  t.hi = hi;
  return t;
}

TargetPdf TargetPdf::from_tag(const std::string& tag) {
  if (tag == "normal") return normal();
  if (tag == "lognormal") return lognormal();
  if (tag == "maxwell") return maxwell();
  if (tag == "laplace") return laplace(0.0, 1.0);
  if (tag == "uniform") return uniform(0.0, 1.0);
  if (tag.rfind("chi:", 0) == 0) return chi(std::stoi(tag.substr(4)));
  if (tag == "chi") return chi(3);
  throw std::invalid_argument("unknown pdf tag: " + tag);
}

double pdf_eval(const TargetPdf& t, double x) {
  switch (t.kind) {
    case PdfKind::Normal: {
      double u = (x - t.mu) / t.sigma;
      return std::exp(-0.5 * u * u) / (t.sigma * std::sqrt(2.0 * PI));
    }
    case PdfKind::LogNormal: {
      if (x <= 0.0) return 0.0;
      double u = (std::log(x) - t.mu) / t.sigma;
      return std::exp(-0.5 * u * u) / (x * t.sigma * std::sqrt(2.0 * PI));
    }
    case PdfKind::Chi:
    case PdfKind::MaxwellBoltzmann: {
      if (x <= 0.0) return 0.0;
      double k2 = 0.5 * t.k;
      return std::pow(2.0, 1.0 - k2) / std::tgamma(k2) *
             std::exp(-0.5 * x * x) * std::pow(x, t.k - 1);
    }
    case PdfKind::Laplace:
      return std::exp(-std::abs(x - t.mu) / t.b) / (2.0 * t.b);
    case PdfKind::Uniform:
      return (x >= t.lo && x <= t.hi) ? 1.0 / (t.hi - t.lo) : 0.0;
  }
  return 0.0;
}

}  // namespace propload::gridpdf

#pragma once

#include <string>

#include "propload/common.hpp"

namespace propload::gridpdf {

enum class PdfKind { Normal, LogNormal, Chi, MaxwellBoltzmann, Laplace, Uniform };

struct TargetPdf {
  PdfKind kind = PdfKind::Normal;
  double mu = 0.0;     // Normal/LogNormal/Laplace location
  double sigma = 1.0;  // Normal/LogNormal scale
  int k = 3;           // Chi degrees of freedom
  double b = 1.0;      // Laplace scale
  double lo = 0.0, hi = 1.0;  // Uniform support

  static TargetPdf normal(double mu = 0.0, double sigma = 1.0);
  static TargetPdf lognormal(double mu = 0.0, double sigma = 1.0);
  static TargetPdf chi(int k);
  static TargetPdf maxwell();  // chi with k = 3
  static TargetPdf laplace(double mu, double b);
  static TargetPdf uniform(double lo, double hi);

  // Parse CLI tags: "normal", "lognormal", "chi:k", "maxwell", "laplace",
  // "uniform". Parameters beyond the tag come from the run configuration.
  static TargetPdf from_tag(const std::string& tag);
};

double pdf_eval(const TargetPdf& target, double x);

}  // namespace propload::gridpdf

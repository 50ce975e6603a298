#pragma once

#include <cstddef>
#include <vector>

#include "propload/common.hpp"

namespace propload::gridpdf {

enum class Support { Symmetric, Positive };  // [-L, L] or [0, 2L]

// Midpoint grid with 2^N points and spacing delta = 2L/2^N. No point ever
// falls on x = 0, which keeps 1/x^2-type potentials finite everywhere.
struct Grid {
  int n_qubits = 0;
  double half_width = 1.0;  // L
  Support support = Support::Symmetric;

  Grid() = default;
  Grid(int N, double L, Support s = Support::Symmetric)
      : n_qubits(N), half_width(L), support(s) {}

  std::size_t size() const { return std::size_t{1} << n_qubits; }
  double delta() const {
    return 2.0 * half_width / static_cast<double>(size());
  }
  double left() const { return support == Support::Symmetric ? -half_width : 0.0; }
  double point(std::size_t i) const {
    return left() + (1.0 + 2.0 * static_cast<double>(i)) * half_width /
                        static_cast<double>(size());
  }
  std::vector<double> points() const {
    std::vector<double> xs(size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = point(i);
    return xs;
  }
};

}  // namespace propload::gridpdf

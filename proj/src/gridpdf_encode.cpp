#include "propload/gridpdf/encode.hpp"

#include <cmath>
#include <stdexcept>

namespace propload::gridpdf {

EncodedState amplitude_encode(const std::vector<double>& density,
                              const Grid& grid, EncodeMode mode) {
  if (density.size() != grid.size())
    throw std::invalid_argument("amplitude_encode: sample count != grid size");
  std::vector<cplx> amps(density.size());
  double z2 = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) {
    double p = density[i];
    if (p < 0.0) throw std::invalid_argument("amplitude_encode: negative density");
    double a = (mode == EncodeMode::Density) ? p : std::sqrt(p);
    amps[i] = a;
    z2 += a * a;
  }
  if (z2 <= 0.0)
    throw std::invalid_argument("amplitude_encode: density vanishes on the grid");
  double z = std::sqrt(z2);
  for (auto& a : amps) a /= z;
  return EncodedState{core::QState(grid.n_qubits, std::move(amps)), grid, mode};
}

EncodedState amplitude_encode(const TargetPdf& target, const Grid& grid,
                              EncodeMode mode) {
  std::vector<double> p(grid.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = pdf_eval(target, grid.point(i));
  return amplitude_encode(p, grid, mode);
}

DistanceReport distance(const core::QState& state,
                        const std::vector<double>& ref, double delta) {
  if (state.dim() != ref.size())
    throw std::invalid_argument("distance: dimension mismatch");
  std::vector<double> p = state.probabilities();
  DistanceReport d;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    double diff = p[i] - ref[i];
    d.l2 += diff * diff;
    d.tv += std::abs(diff);
    d.sup = std::max(d.sup, std::abs(diff) / delta);
  }
  d.l2 = std::sqrt(d.l2);
  d.tv *= 0.5;
  return d;
}

DistanceReport distance(const core::QState& state, const EncodedState& reference) {
  return distance(state, reference.state.probabilities(), reference.grid.delta());
}

}  // namespace propload::gridpdf

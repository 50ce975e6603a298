#pragma once

#include "propload/core/state.hpp"
#include "propload/gridpdf/grid.hpp"
#include "propload/gridpdf/target_pdf.hpp"

namespace propload::gridpdf {

// Density mode: amps ~ p(x_i) (the paper's |p> encoding);
// sampler mode: amps ~ sqrt(p(x_i)), so probabilities sample the pdf.
enum class EncodeMode { Density, Sampler };

struct EncodedState {
  core::QState state;
  Grid grid;
  EncodeMode mode = EncodeMode::Sampler;
};

EncodedState amplitude_encode(const TargetPdf& target, const Grid& grid,
                              EncodeMode mode);

// Encode explicit non-negative density samples p(x_i) on the grid.
EncodedState amplitude_encode(const std::vector<double>& density_samples,
                              const Grid& grid, EncodeMode mode);

struct DistanceReport {
  double l2 = 0.0;   // Euclidean distance of probability vectors
  double sup = 0.0;  // max pointwise |density difference| (prob / delta)
  double tv = 0.0;   // total variation (1/2) sum |p - q|
};

DistanceReport distance(const core::QState& state, const EncodedState& reference);
DistanceReport distance(const core::QState& state,
                        const std::vector<double>& ref_probabilities,
                        double delta);

}  // namespace propload::gridpdf

#include <cmath>
#include <stdexcept>

#include "propload/core/gates.hpp"
#include "propload/evolve/evolve.hpp"

namespace propload::evolve {
namespace {

// Signed momentum for Fourier index j: p = 2 pi jt / (2L), jt in [-M/2, M/2).
double momentum(std::size_t j, std::size_t M, double L) {
  auto js = static_cast<double>(j < M / 2 ? static_cast<long long>(j)
                                          : static_cast<long long>(j) -
                                                static_cast<long long>(M));
  return 2.0 * PI * js / (2.0 * L);
}

void ff_chunk(std::vector<cplx>& a, const gridpdf::Grid& grid, double t) {
  const std::size_t M = a.size();
  const double tn = std::tan(t);
  const double sn = std::sin(2.0 * t);
  for (std::size_t i = 0; i < M; ++i)
    a[i] *= std::exp(cplx(0.0, -0.5 * tn * sq(grid.point(i))));
  core::fft_radix2(a, +1);
  for (std::size_t j = 0; j < M; ++j)
    a[j] *= std::exp(cplx(0.0, -0.5 * sn * sq(momentum(j, M, grid.half_width))));
  core::fft_radix2(a, -1);
  for (std::size_t i = 0; i < M; ++i)
    a[i] *= std::exp(cplx(0.0, -0.5 * tn * sq(grid.point(i))));
}

}  // namespace

core::QState fastforward_qho(const core::QState& state, const gridpdf::Grid& grid,
                             double t, double chunk_bound) {
  if (state.dim() != grid.size())
    throw std::invalid_argument("fastforward_qho: state/grid dimension mismatch");
  if (!(chunk_bound > 0.0 && chunk_bound < 0.5 * PI))
    throw std::invalid_argument("fastforward_qho: chunk bound must be in (0, pi/2)");
  std::vector<cplx> a = state.amps();
  double remaining = t;
  const double step = (t >= 0.0) ? chunk_bound : -chunk_bound;
  while (std::abs(remaining) > chunk_bound) {
    ff_chunk(a, grid, step);
    remaining -= step;
  }
  if (remaining != 0.0) ff_chunk(a, grid, remaining);
  return core::QState(state.n_qubits(), std::move(a));
}

}  // namespace propload::evolve

#include <cmath>
#include <stdexcept>

#include "propload/core/gates.hpp"
#include "propload/evolve/evolve.hpp"

namespace propload::evolve {

TrotterPlan TrotterPlan::make(double t, double eps) {
  if (t < 0.0 || eps <= 0.0)
    throw std::invalid_argument("TrotterPlan: need t >= 0, eps > 0");
  TrotterPlan p;
  p.t = t;
  p.eps = eps;
  if (t == 0.0) {
    p.dt = 0.0;
    p.n_steps = 0;
    return p;
  }
  p.dt = std::sqrt(eps / t);
  p.n_steps = static_cast<int>(std::ceil(t / p.dt));
  p.dt = t / p.n_steps;  // n_steps * dt == t exactly
  return p;
}

core::QState trotter_step(const core::QState& state,
                          const ham::DiscreteHamiltonian& h, double dt) {
  if (state.dim() != h.grid.size())
    throw std::invalid_argument("trotter_step: state/grid dimension mismatch");
  std::vector<cplx> a = state.amps();
  const std::size_t M = a.size();
  std::vector<double> kin = h.kinetic_eigenvalues();
  for (std::size_t i = 0; i < M; ++i)
    a[i] *= std::exp(cplx(0.0, -0.5 * dt * h.v_diag[i]));
  core::fft_radix2(a, +1);
  for (std::size_t j = 0; j < M; ++j) a[j] *= std::exp(cplx(0.0, -dt * kin[j]));
  core::fft_radix2(a, -1);
  for (std::size_t i = 0; i < M; ++i)
    a[i] *= std::exp(cplx(0.0, -0.5 * dt * h.v_diag[i]));
  return core::QState(state.n_qubits(), std::move(a));
}

core::QState evolve_trotter(const core::QState& state,
                            const ham::DiscreteHamiltonian& h, double t,
                            double eps) {
  TrotterPlan plan = TrotterPlan::make(t, eps);
  core::QState s = state;
  for (int step = 0; step < plan.n_steps; ++step) s = trotter_step(s, h, plan.dt);
  return s;
}

}  // namespace propload::evolve

#pragma once

#include <cstdint>
#include <functional>

#include "propload/core/state.hpp"
#include "propload/hamiltonian/hamiltonian.hpp"

namespace propload::evolve {

// Step size rule dt = sqrt(eps/t) from the Trotter cost claim.
struct TrotterPlan {
  double t = 0.0;
  double eps = 1e-3;
  double dt = 0.0;
  int n_steps = 0;

  static TrotterPlan make(double t, double eps);
};

// Symmetric split step exp(-iV dt/2) exp(-i T dt) exp(-iV dt/2) with the
// kinetic phase applied in the Fourier basis.
core::QState trotter_step(const core::QState& state,
                          const ham::DiscreteHamiltonian& h, double dt);

core::QState evolve_trotter(const core::QState& state,
                            const ham::DiscreteHamiltonian& h, double t,
                            double eps);

// Fast-forward for H = p^2 + x^2 (m=1/2, omega=2 convention) via
// exp(-it(p^2+x^2)) = exp(-i x^2 tan t / 2) exp(-i p^2 sin(2t)/2)
//                     exp(-i x^2 tan t / 2),
// with |t| chunked below pi/4. Momentum p_j = 2 pi jt/(2L), jt the signed
// Fourier index.
core::QState fastforward_qho(const core::QState& state, const gridpdf::Grid& grid,
                             double t, double chunk_bound = 0.25 * PI);

struct PhaseEstimate {
  int m_ancilla = 0;
  double phase = 0.0;        // modal measured phase in [0,1)
  core::QState post_state;   // system state after post-selection
  bool success = false;      // modal bin == expected ground bin
  double success_frequency = 0.0;
  int shots = 0;
  bool gap_resolved = true;  // false when 2^-m is above the gap scale
};

struct ProjectOptions {
  int m_ancilla = 6;
  int shots = 1000;
  std::uint64_t seed = 0;
  double t0 = 0.0;          // base evolution time; 0 -> pi/(2 lambda_max)
  double gap = 0.0;         // spectral gap estimate for the resolution check
  int expected_bin = -1;    // ground bin; -1 -> use the modal bin
};

// Textbook phase estimation with U(2^j t0) built from the supplied evolution
// oracle; measures the ancilla register, post-selects the modal bin.
PhaseEstimate project_ground(
    const core::QState& state,
    const std::function<core::QState(const core::QState&, double)>& unitary,
    double lambda_max, const ProjectOptions& opt);

}  // namespace propload::evolve

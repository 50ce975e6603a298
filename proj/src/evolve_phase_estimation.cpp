#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "propload/core/gates.hpp"
#include "propload/evolve/evolve.hpp"

namespace propload::evolve {

PhaseEstimate project_ground(
    const core::QState& state,
    const std::function<core::QState(const core::QState&, double)>& unitary,
    double lambda_max, const ProjectOptions& opt) {
  if (opt.m_ancilla < 1 || opt.m_ancilla > 20)
    throw std::invalid_argument("project_ground: ancilla count out of range");
  const std::size_t Ma = std::size_t{1} << opt.m_ancilla;
  const std::size_t Ms = state.dim();
  double t0 = opt.t0 > 0.0 ? opt.t0 : 0.5 * PI / lambda_max;

  // Joint register as one system vector per ancilla value. After the Hadamard
  // column and all controlled powers, branch a carries U(a t0)|psi>.
  std::vector<std::vector<cplx>> branch(Ma);
  {
    core::QState cur = state;  // U(j t0)|psi>, advanced incrementally
    const double amp = 1.0 / std::sqrt(static_cast<double>(Ma));
    for (std::size_t a = 0; a < Ma; ++a) {
      branch[a] = cur.amps();
      for (auto& c : branch[a]) c *= amp;
      if (a + 1 < Ma) cur = unitary(cur, t0);
    }
  }

  // Inverse QFT over the ancilla index: one length-Ma transform per system
  // amplitude slot.
  std::vector<cplx> column(Ma);
  for (std::size_t s = 0; s < Ms; ++s) {
    for (std::size_t a = 0; a < Ma; ++a) column[a] = branch[a][s];
    core::fft_radix2(column, -1);
    for (std::size_t a = 0; a < Ma; ++a) branch[a][s] = column[a];
  }

  std::vector<double> prob(Ma, 0.0);
  for (std::size_t a = 0; a < Ma; ++a)
    for (std::size_t s = 0; s < Ms; ++s) prob[a] += std::norm(branch[a][s]);

  const std::size_t modal = static_cast<std::size_t>(
      std::max_element(prob.begin(), prob.end()) - prob.begin());
  const std::size_t target_bin =
      opt.expected_bin >= 0 ? static_cast<std::size_t>(opt.expected_bin) : modal;

  PhaseEstimate pe;
  pe.m_ancilla = opt.m_ancilla;
  pe.phase = static_cast<double>(modal) / static_cast<double>(Ma);
  pe.success = (modal == target_bin);
  pe.gap_resolved =
      opt.gap <= 0.0 || (opt.gap * t0 / (2.0 * PI) > 1.0 / static_cast<double>(Ma));

  core::QState post(state.n_qubits(), branch[target_bin]);
  post.normalize();
  pe.post_state = std::move(post);

  // Shots: deterministic inverse-CDF sampling of the ancilla distribution.
  pe.shots = opt.shots;
  if (opt.shots > 0) {
    std::vector<double> cdf(Ma);
    double acc = 0.0;
    for (std::size_t a = 0; a < Ma; ++a) {
      acc += prob[a];
      cdf[a] = acc;
    }
    std::mt19937_64 rng(opt.seed);
    int hits = 0;
    for (int shot = 0; shot < opt.shots; ++shot) {
      double u = acc * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
      std::size_t a = static_cast<std::size_t>(
          std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      if (a >= Ma) a = Ma - 1;
      if (a == target_bin) ++hits;
    }
    pe.success_frequency = static_cast<double>(hits) / opt.shots;
  }
  return pe;
}

}  // namespace propload::evolve

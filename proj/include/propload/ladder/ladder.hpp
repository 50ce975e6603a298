#pragma once

#include <optional>
#include <vector>

#include "propload/core/gates.hpp"
#include "propload/gridpdf/encode.hpp"

namespace propload::ladder {

// K = 2^k level ladder on N qubits, described either by rotation angles
// (monotone construction) or by explicit level values f(0..2^k-1).
struct LadderSpec {
  int k = 1;
  int n_qubits = 2;
  std::vector<double> angles;  // theta_1..theta_k, angle form
  std::vector<double> levels;  // f(0)..f(2^k-1), level form

  bool angle_form() const { return !angles.empty(); }
  // Throws std::invalid_argument when the form invariants fail:
  //  angle form: theta strictly decreasing in (0, pi/2) with
  //              cot(theta_i) < cot^2(theta_{i+1});
  //  level form: strictly increasing, non-negative, one positive; k <= N-1.
  void validate() const;
};

// 4-gate expansion of R(theta) = C1(pi/2-theta) C2(theta):
// [X(q1), CRot(q1,q2,theta), X(q1), CRot(q1,q2,pi/2-theta)].
core::Circuit r_gate_circuit(double theta, int q1, int q2, int n_qubits);

// N+3k gates, depth k: Hadamards + k R-gate expansions (eq. of the monotone
// ladder claim). Level b of the |0,b,c> half carries
// f(2^k-1-b) = prod_{i in [b]} sin(theta_i) prod_{i not in [b]} cos(theta_i).
core::Circuit monotone_ladder_circuit(const LadderSpec& spec);

// Arbitrary-level ladder via a recursive binary-split amplitude loader on the
// leading k+1 qubits (uniformly controlled Ry rotations, O(K) gates), then
// Hadamards on the rest.
core::Circuit arbitrary_ladder_circuit(const LadderSpec& spec);

// Level values of the prepared monotone ladder before normalization.
std::vector<double> monotone_levels(const LadderSpec& spec);

// Ladder approximation of an even, positive pdf per the K-level approximation
// proposition: k = min(N-1, ceil(log2(M L / (eps min p)))) and block-RMS
// levels. Throws if the sampled pdf is not symmetric/positive on the grid.
LadderSpec ladder_for_pdf(const gridpdf::TargetPdf& target,
                          const gridpdf::Grid& grid, double eps);

core::Circuit explicit_two_level(int n_qubits);
core::Circuit explicit_four_level(int n_qubits);

}  // namespace propload::ladder

#pragma once

#include <memory>
#include <vector>

#include "propload/core/state.hpp"

namespace propload::core {

enum class GateKind {
  H,
  X,
  Rx,
  Ry,
  Rz,
  CNOT,
  CRot,      // controlled [[cos t,-sin t],[sin t,cos t]] (full angle)
  R2,        // the two-qubit ladder rotation family R(theta)
  DiagPhase, // amps[i] *= exp(i phi[i])
  QFT,
  IQFT,
};

struct Gate {
  GateKind kind;
  int q1 = -1;  // target (single qubit) or control (two qubit)
  int q2 = -1;  // target for two-qubit kinds
  double theta = 0.0;
  std::shared_ptr<const std::vector<double>> phases;  // DiagPhase only

  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate rx(int q, double t) { return {GateKind::Rx, q, -1, t}; }
  static Gate ry(int q, double t) { return {GateKind::Ry, q, -1, t}; }
  static Gate rz(int q, double t) { return {GateKind::Rz, q, -1, t}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
  static Gate crot(int c, int t, double th) { return {GateKind::CRot, c, t, th}; }
  static Gate r2(int c, int t, double th) { return {GateKind::R2, c, t, th}; }
  static Gate diag_phase(std::vector<double> phi) {
    Gate g{GateKind::DiagPhase};
    g.phases = std::make_shared<const std::vector<double>>(std::move(phi));
    return g;
  }
  static Gate qft() { return {GateKind::QFT}; }
  static Gate iqft() { return {GateKind::IQFT}; }
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void push(Gate g) { gates.push_back(std::move(g)); }
  std::size_t size() const { return gates.size(); }
};

// Returns U * state. Throws on qubit indices out of range.
QState apply(const QState& state, const Gate& gate);
QState apply(const QState& state, const Circuit& circuit);

// QFT convention: amplitudes transform as
//   out[k] = 2^{-n/2} sum_x exp(+2 pi i x k / 2^n) in[x],
// computed by a radix-2 transform on the amplitude vector.
QState qft(const QState& state);
QState iqft(const QState& state);

// In-place unitary-normalized radix-2 FFT on a power-of-two vector;
// sign=+1 matches the QFT convention above.
void fft_radix2(std::vector<cplx>& v, int sign);

// Dense matrix of a gate/circuit on n qubits (test support, n small).
std::vector<std::vector<cplx>> dense_matrix(const Gate& g, int n_qubits);
std::vector<std::vector<cplx>> dense_matrix(const Circuit& c);

}  // namespace propload::core

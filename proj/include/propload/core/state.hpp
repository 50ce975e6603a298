#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "propload/common.hpp"

namespace propload::core {

// Statevector over n qubits. Qubit 0 is the MOST significant bit of the basis
// index, matching the |q0, b, c> ladder layout where the leading qubit selects
// the mirror half.
class QState {
 public:
  QState() = default;
  explicit QState(int n_qubits);  // |0...0>
  QState(int n_qubits, std::vector<cplx> amps);

  static QState from_amplitudes(std::vector<cplx> amps);  // infer n from size

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amps() const { return amps_; }
  std::vector<cplx>& amps() { return amps_; }
  cplx amp(std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  std::vector<double> probabilities() const;

  // CSV rows `index,re,im`, with header.
  void dump_csv(std::ostream& os) const;
  // JSON array of [re, im] pairs.
  void dump_json(std::ostream& os) const;

 private:
  int n_ = 0;
  std::vector<cplx> amps_;
};

cplx inner(const QState& a, const QState& b);
double fidelity(const QState& a, const QState& b);  // |<a|b>|^2

}  // namespace propload::core

#include "propload/core/state.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace propload::core {

QState::QState(int n_qubits)
    : n_(n_qubits), amps_(std::size_t{1} << n_qubits, cplx(0.0, 0.0)) {
  amps_[0] = 1.0;
}

QState::QState(int n_qubits, std::vector<cplx> amps)
    : n_(n_qubits), amps_(std::move(amps)) {
  if (amps_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("QState: amplitude count != 2^n");
}

QState QState::from_amplitudes(std::vector<cplx> amps) {
  std::size_t s = amps.size();
  if (s == 0 || (s & (s - 1)) != 0)
    throw std::invalid_argument("QState: length is not a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < s) ++n;
  return QState(n, std::move(amps));
}

double QState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void QState::normalize() {
  double nrm = norm();
  if (nrm == 0.0) throw std::runtime_error("QState: cannot normalize zero state");
  for (auto& a : amps_) a /= nrm;
}

std::vector<double> QState::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void QState::dump_csv(std::ostream& os) const {
  os << "index,re,im\n";
  os.precision(17);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    os << i << ',' << amps_[i].real() << ',' << amps_[i].imag() << '\n';
}

void QState::dump_json(std::ostream& os) const {
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i) os << ',';
    os << '[' << amps_[i].real() << ',' << amps_[i].imag() << ']';
  }
  os << ']';
}

cplx inner(const QState& a, const QState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp(i)) * b.amp(i);
  return s;
}

double fidelity(const QState& a, const QState& b) { return std::norm(inner(a, b)); }

}  // namespace propload::core

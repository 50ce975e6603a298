#include "propload/core/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace propload::core {
namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::out_of_range("gate qubit index out of range");
}

// Apply a 2x2 matrix to qubit q (q counted from the most significant bit).
void apply_1q(std::vector<cplx>& a, int n, int q, const cplx m[2][2]) {
  const std::size_t stride = std::size_t{1} << (n - 1 - q);
  const std::size_t dim = a.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      cplx a0 = a[i], a1 = a[i + stride];
      a[i] = m[0][0] * a0 + m[0][1] * a1;
      a[i + stride] = m[1][0] * a0 + m[1][1] * a1;
    }
  }
}

// Apply a 2x2 matrix to target qubit t on the subspace where control c is 1.
void apply_controlled(std::vector<cplx>& a, int n, int c, int t, const cplx m[2][2]) {
  const std::size_t cm = std::size_t{1} << (n - 1 - c);
  const std::size_t tm = std::size_t{1} << (n - 1 - t);
  const std::size_t dim = a.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cm) && !(i & tm)) {
      std::size_t j = i | tm;
      cplx a0 = a[i], a1 = a[j];
      a[i] = m[0][0] * a0 + m[0][1] * a1;
      a[j] = m[1][0] * a0 + m[1][1] * a1;
    }
  }
}

}  // namespace

void fft_radix2(std::vector<cplx>& v, int sign) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_radix2: length not a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * PI / static_cast<double>(len);
    cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = v[i + k];
        cplx t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wl;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : v) x *= scale;
}

QState qft(const QState& state) {
  std::vector<cplx> a = state.amps();
  fft_radix2(a, +1);
  return QState(state.n_qubits(), std::move(a));
}

QState iqft(const QState& state) {
  std::vector<cplx> a = state.amps();
  fft_radix2(a, -1);
  return QState(state.n_qubits(), std::move(a));
}

QState apply(const QState& state, const Gate& g) {
  const int n = state.n_qubits();
  std::vector<cplx> a = state.amps();
  const double c = std::cos(g.theta), s = std::sin(g.theta);
  const double ch = std::cos(0.5 * g.theta), sh = std::sin(0.5 * g.theta);
  switch (g.kind) {
    case GateKind::H: {
      check_qubit(g.q1, n);
      const double r = 1.0 / std::sqrt(2.0);
      const cplx m[2][2] = {{r, r}, {r, -r}};
      apply_1q(a, n, g.q1, m);
      break;
    }
    case GateKind::X: {
      check_qubit(g.q1, n);
      const cplx m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
      apply_1q(a, n, g.q1, m);
      break;
    }
    case GateKind::Rx: {
      check_qubit(g.q1, n);
      const cplx m[2][2] = {{ch, -I * sh}, {-I * sh, ch}};
      apply_1q(a, n, g.q1, m);
      break;
    }
    case GateKind::Ry: {
      check_qubit(g.q1, n);
      const cplx m[2][2] = {{ch, -sh}, {sh, ch}};
      apply_1q(a, n, g.q1, m);
      break;
    }
    case GateKind::Rz: {
      check_qubit(g.q1, n);
      const cplx m[2][2] = {{std::exp(-I * (0.5 * g.theta)), 0.0},
                            {0.0, std::exp(I * (0.5 * g.theta))}};
      apply_1q(a, n, g.q1, m);
      break;
    }
    case GateKind::CNOT: {
      check_qubit(g.q1, n);
      check_qubit(g.q2, n);
      const cplx m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
      apply_controlled(a, n, g.q1, g.q2, m);
      break;
    }
    case GateKind::CRot: {
      check_qubit(g.q1, n);
      check_qubit(g.q2, n);
      const cplx m[2][2] = {{c, -s}, {s, c}};
      apply_controlled(a, n, g.q1, g.q2, m);
      break;
    }
    case GateKind::R2: {
      // R(theta): rot(theta) on the q1=0 block, [[s,-c],[c,s]] on the q1=1
      // block; equals C1(pi/2-theta) C2(theta).
      check_qubit(g.q1, n);
      check_qubit(g.q2, n);
      const std::size_t cm = std::size_t{1} << (n - 1 - g.q1);
      const std::size_t tm = std::size_t{1} << (n - 1 - g.q2);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & tm)) {
          std::size_t j = i | tm;
          cplx a0 = a[i], a1 = a[j];
          if (i & cm) {
            a[i] = s * a0 - c * a1;
            a[j] = c * a0 + s * a1;
          } else {
            a[i] = c * a0 - s * a1;
            a[j] = s * a0 + c * a1;
          }
        }
      }
      break;
    }
    case GateKind::DiagPhase: {
      if (!g.phases || g.phases->size() != a.size())
        throw std::invalid_argument("DiagPhase: phase vector length mismatch");
      for (std::size_t i = 0; i < a.size(); ++i)
        a[i] *= std::exp(I * (*g.phases)[i]);
      break;
    }
    case GateKind::QFT:
      fft_radix2(a, +1);
      break;
    case GateKind::IQFT:
      fft_radix2(a, -1);
      break;
  }
  return QState(n, std::move(a));
}

QState apply(const QState& state, const Circuit& circ) {
  QState s = state;
  for (const auto& g : circ.gates) s = apply(s, g);
  return s;
}

std::vector<std::vector<cplx>> dense_matrix(const Gate& g, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<std::vector<cplx>> m(dim, std::vector<cplx>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    QState basis(n_qubits);
    basis.amps()[0] = 0.0;
    basis.amps()[col] = 1.0;
    QState out = apply(basis, g);
    for (std::size_t row = 0; row < dim; ++row) m[row][col] = out.amp(row);
  }
  return m;
}

std::vector<std::vector<cplx>> dense_matrix(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  std::vector<std::vector<cplx>> m(dim, std::vector<cplx>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    QState basis(c.n_qubits);
    basis.amps()[0] = 0.0;
    basis.amps()[col] = 1.0;
    QState out = apply(basis, c);
    for (std::size_t row = 0; row < dim; ++row) m[row][col] = out.amp(row);
  }
  return m;
}

}  // namespace propload::core

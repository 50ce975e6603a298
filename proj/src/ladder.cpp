#include "propload/ladder/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace propload::ladder {
namespace {

using core::Circuit;
using core::Gate;

int bit_count(unsigned v) {
  int c = 0;
  for (; v; v >>= 1) c += static_cast<int>(v & 1u);
  return c;
}

// Uniformly controlled Ry on `target` with control qubits 0..d-1 (prefix
// value selects angle), decomposed into 2^d Ry + 2^d CNOT via the gray-code
// walk. theta[c] is the net rotation for prefix value c.
void emit_multiplexed_ry(Circuit& circ, int d, int target,
                         const std::vector<double>& theta) {
  const std::size_t m = std::size_t{1} << d;
  if (d == 0) {
    if (theta[0] != 0.0) circ.push(Gate::ry(target, theta[0]));
    return;
  }
  bool all_zero = std::all_of(theta.begin(), theta.end(),
                              [](double t) { return t == 0.0; });
  if (all_zero) return;
  auto gray = [](std::size_t i) { return i ^ (i >> 1); };
  std::vector<double> phi(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      int par = bit_count(static_cast<unsigned>(c & gray(i))) & 1;
      s += (par ? -1.0 : 1.0) * theta[c];
    }
    phi[i] = s / static_cast<double>(m);
  }
  for (std::size_t i = 0; i < m; ++i) {
    circ.push(Gate::ry(target, phi[i]));
    std::size_t flip = gray(i) ^ gray((i + 1) % m);
    int bit = 0;
    while (!((flip >> bit) & 1u)) ++bit;
    circ.push(Gate::cnot(d - 1 - bit, target));
  }
}

// Binary-split loader: prepares the normalized non-negative vector v on
// qubits 0..m-1 of an n-qubit register.
void emit_amplitude_loader(Circuit& circ, int m, const std::vector<double>& v) {
  const std::size_t dim = std::size_t{1} << m;
  if (v.size() != dim) throw std::invalid_argument("loader: bad vector length");
  for (int d = 0; d < m; ++d) {
    const std::size_t prefixes = std::size_t{1} << d;
    const std::size_t block = dim >> d;
    std::vector<double> theta(prefixes, 0.0);
    for (std::size_t c = 0; c < prefixes; ++c) {
      double wl = 0.0, wr = 0.0;
      for (std::size_t i = 0; i < block / 2; ++i) {
        wl += v[c * block + i] * v[c * block + i];
        wr += v[c * block + block / 2 + i] * v[c * block + block / 2 + i];
      }
      if (wl + wr > 0.0) theta[c] = 2.0 * std::atan2(std::sqrt(wr), std::sqrt(wl));
    }
    emit_multiplexed_ry(circ, d, d, theta);
  }
}

}  // namespace

void LadderSpec::validate() const {
  if (k < 0 || k > n_qubits - 1)
    throw std::invalid_argument("LadderSpec: need 0 <= k <= N-1");
  if (angle_form()) {
    if (static_cast<int>(angles.size()) != k)
      throw std::invalid_argument("LadderSpec: expected k angles");
    for (double t : angles)
      if (!(t > 0.0 && t < 0.5 * PI))
        throw std::invalid_argument("LadderSpec: angles must lie in (0, pi/2)");
    for (int i = 0; i + 1 < k; ++i) {
      if (!(angles[i] > angles[i + 1]))
        throw std::invalid_argument("LadderSpec: angles must be strictly decreasing");
      double c0 = 1.0 / std::tan(angles[i]);
      double c1 = 1.0 / std::tan(angles[i + 1]);
      if (!(c0 < c1 * c1))
        throw std::invalid_argument("LadderSpec: cot(theta_i) < cot^2(theta_{i+1}) fails");
    }
  } else {
    if (levels.size() != (std::size_t{1} << k))
      throw std::invalid_argument("LadderSpec: expected 2^k levels");
    bool positive = false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] < 0.0)
        throw std::invalid_argument("LadderSpec: levels must be non-negative");
      if (levels[i] > 0.0) positive = true;
      if (i > 0 && !(levels[i] > levels[i - 1]))
        throw std::invalid_argument("LadderSpec: levels must be strictly increasing");
    }
    if (!positive) throw std::invalid_argument("LadderSpec: all levels are zero");
  }
}

core::Circuit r_gate_circuit(double theta, int q1, int q2, int n_qubits) {
  Circuit c;
  c.n_qubits = n_qubits;
  c.push(Gate::x(q1));
  c.push(Gate::crot(q1, q2, theta));
  c.push(Gate::x(q1));
  c.push(Gate::crot(q1, q2, 0.5 * PI - theta));
  return c;
}

core::Circuit monotone_ladder_circuit(const LadderSpec& spec) {
  if (!spec.angle_form())
    throw std::invalid_argument("monotone_ladder_circuit: angle form required");
  spec.validate();
  const int N = spec.n_qubits, k = spec.k;
  Circuit c;
  c.n_qubits = N;
  c.push(Gate::h(0));
  for (int q = k + 1; q < N; ++q) c.push(Gate::h(q));
  for (int j = 1; j <= k; ++j) {
    Circuit r = r_gate_circuit(spec.angles[static_cast<std::size_t>(j - 1)], 0, j, N);
    for (auto& g : r.gates) c.push(g);
  }
  return c;  // 1 + (N-k-1) + 4k = N+3k gates, depth k in R-gate layers
}

std::vector<double> monotone_levels(const LadderSpec& spec) {
  const std::size_t K = std::size_t{1} << spec.k;
  std::vector<double> f(K, 1.0);
  for (std::size_t b = 0; b < K; ++b) {
    for (int i = 1; i <= spec.k; ++i) {
      // bit i of b counted from the most significant ladder qubit
      bool set = (b >> (spec.k - i)) & 1u;
      double t = spec.angles[static_cast<std::size_t>(i - 1)];
      f[b] *= set ? std::cos(t) : std::sin(t);
    }
  }
  return f;
}

core::Circuit arbitrary_ladder_circuit(const LadderSpec& spec) {
  if (spec.angle_form())
    throw std::invalid_argument("arbitrary_ladder_circuit: level form required");
  spec.validate();
  const int N = spec.n_qubits, k = spec.k;
  const std::size_t K = std::size_t{1} << k;
  std::vector<double> v(2 * K);
  double z2 = 0.0;
  for (std::size_t b = 0; b < K; ++b) {
    v[b] = spec.levels[b];                // |0,b> half, increasing
    v[K + b] = spec.levels[K - 1 - b];    // |1,b> mirror, decreasing
    z2 += v[b] * v[b] + v[K + b] * v[K + b];
  }
  double z = std::sqrt(z2);
  for (auto& x : v) x /= z;
  Circuit c;
  c.n_qubits = N;
  emit_amplitude_loader(c, k + 1, v);
  for (int q = k + 1; q < N; ++q) c.push(Gate::h(q));
  return c;
}

LadderSpec ladder_for_pdf(const gridpdf::TargetPdf& target,
                          const gridpdf::Grid& grid, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("ladder_for_pdf: eps must be positive");
  const std::size_t M = grid.size();
  std::vector<double> p(M);
  double pmin = 1e300, pmax = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    p[i] = gridpdf::pdf_eval(target, grid.point(i));
    pmin = std::min(pmin, p[i]);
    pmax = std::max(pmax, p[i]);
  }
  if (pmin <= 0.0)
    throw std::invalid_argument("ladder_for_pdf: pdf must be positive on the grid");
  for (std::size_t i = 0; i < M / 2; ++i) {
    if (std::abs(p[i] - p[M - 1 - i]) > 1e-9 * pmax)
      throw std::invalid_argument("ladder_for_pdf: pdf not even about the grid center");
  }
  // M = max |p'| estimated by central differences at the midpoints.
  double slope = 0.0;
  const double delta = grid.delta();
  for (std::size_t i = 1; i + 1 < M; ++i)
    slope = std::max(slope, std::abs(p[i + 1] - p[i - 1]) / (2.0 * delta));

  const int N = grid.n_qubits;
  double ratio = slope * grid.half_width / (eps * pmin);
  int k = 0;
  if (ratio > 1.0) k = static_cast<int>(std::ceil(std::log2(ratio)));
  k = std::min(k, N - 1);

  // Block-RMS levels over the first half, g(b)/Y with Y chosen so the
  // mirrored state is normalized.
  const std::size_t K = std::size_t{1} << k;
  const std::size_t block = (M / 2) / K;
  std::vector<double> g(K, 0.0);
  double y2 = 0.0;
  for (std::size_t b = 0; b < K; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < block; ++i) {
      double val = p[b * block + i];
      s += val * val;
    }
    g[b] = std::sqrt(s / static_cast<double>(block));
    y2 += 2.0 * static_cast<double>(block) * g[b] * g[b];
  }
  double y = std::sqrt(y2);
  LadderSpec spec;
  spec.k = k;
  spec.n_qubits = N;
  spec.levels.resize(K);
  for (std::size_t b = 0; b < K; ++b) spec.levels[b] = g[b] / y;
  return spec;
}

core::Circuit explicit_two_level(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("explicit_two_level: need N >= 2");
  Circuit c;
  c.n_qubits = n_qubits;
  c.push(Gate::x(1));
  c.push(Gate::h(0));
  c.push(Gate::cnot(0, 1));
  for (int q = 2; q < n_qubits; ++q) c.push(Gate::h(q));
  return c;
}

core::Circuit explicit_four_level(int n_qubits) {
  if (n_qubits < 3) throw std::invalid_argument("explicit_four_level: need N >= 3");
  Circuit c;
  c.n_qubits = n_qubits;
  c.push(Gate::x(1));
  c.push(Gate::h(0));
  c.push(Gate::cnot(0, 1));
  // H'|0> = (1/(2 sqrt 2))|0> + (sqrt 7/(2 sqrt 2))|1>
  c.push(Gate::ry(2, 2.0 * std::acos(1.0 / (2.0 * std::sqrt(2.0)))));
  c.push(Gate::cnot(0, 2));
  for (int q = 3; q < n_qubits; ++q) c.push(Gate::h(q));
  return c;
}

}  // namespace propload::ladder

#include "propload/hamiltonian/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace propload::ham {

PotentialSpec PotentialSpec::zero() { return {}; }

PotentialSpec PotentialSpec::harmonic(double omega, PhysConsts pc) {
  if (omega <= 0.0) throw std::invalid_argument("harmonic: omega must be positive");
  PotentialSpec s;
  s.kind = PotKind::Harmonic;
  s.omega = omega;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::radial(double omega, double lambda, PhysConsts pc) {
  if (omega <= 0.0) throw std::invalid_argument("radial: omega must be positive");
  if (lambda <= -1.0) throw std::invalid_argument("radial: need Re(lambda) > -1");
  PotentialSpec s;
  s.kind = PotKind::Radial;
  s.omega = omega;
  s.lambda = lambda;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::half_linear(double k, PhysConsts pc) {
  PotentialSpec s;
  s.kind = PotKind::HalfLinear;
  s.slope = k;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::linear(double k, PhysConsts pc) {
  PotentialSpec s;
  s.kind = PotKind::Linear;
  s.slope = k;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::infinite_well(double a, PhysConsts pc) {
  if (a <= 0.0) throw std::invalid_argument("infinite_well: width must be positive");
  PotentialSpec s;
  s.kind = PotKind::InfiniteWell;
  s.well_width = a;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::poschl_teller(double alpha, double beta, PhysConsts pc) {
  PotentialSpec s;
  s.kind = PotKind::PoschlTeller;
  s.alpha = alpha;
  s.beta = beta;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::coulomb(double e1e2, PhysConsts pc) {
  PotentialSpec s;
  s.kind = PotKind::Coulomb;
  s.e1e2 = e1e2;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::delta_well(double a, PhysConsts pc) {
  if (a <= 0.0) throw std::invalid_argument("delta_well: strength must be positive");
  PotentialSpec s;
  s.kind = PotKind::Delta;
  s.strength = a;
  s.consts = pc;
  return s;
}

PotentialSpec PotentialSpec::from_ground_state(std::vector<double> psi0, PhysConsts pc) {
  PotentialSpec s;
  s.kind = PotKind::FromGroundState;
  s.ground_samples = std::move(psi0);
  s.consts = pc;
  return s;
}

bool PotentialSpec::needs_positive_grid() const {
  switch (kind) {
    case PotKind::Radial:
    case PotKind::HalfLinear:
    case PotKind::InfiniteWell:
    case PotKind::PoschlTeller:
    case PotKind::Coulomb:
      return true;
    default:
      return false;
  }
}

std::vector<double> laplacian_spectrum(const gridpdf::Grid& grid) {
  const std::size_t M = grid.size();
  const double inv_d2 = 1.0 / (grid.delta() * grid.delta());
  std::vector<double> lam(M);
  for (std::size_t j = 0; j < M; ++j)
    lam[j] = inv_d2 * 2.0 * (1.0 - std::cos(2.0 * PI * static_cast<double>(j) /
                                            static_cast<double>(M)));
  return lam;
}

std::vector<double> DiscreteHamiltonian::kinetic_eigenvalues() const {
  std::vector<double> lam = laplacian_spectrum(grid);
  const double c = kinetic_coeff();
  for (auto& l : lam) l *= c;
  return lam;
}

DiscreteHamiltonian build_potential(const PotentialSpec& spec,
                                    const gridpdf::Grid& grid) {
  if (spec.needs_positive_grid() && grid.support != gridpdf::Support::Positive)
    throw std::invalid_argument("build_potential: potential needs the positive grid [0, 2L]");
  const std::size_t M = grid.size();
  const double hbar = spec.consts.hbar, m = spec.consts.mass;
  std::vector<double> v(M, 0.0);
  auto x_of = [&grid](std::size_t i) { return grid.point(i); };
  switch (spec.kind) {
    case PotKind::Zero:
      break;
    case PotKind::Harmonic:
      for (std::size_t i = 0; i < M; ++i)
        v[i] = 0.5 * m * spec.omega * spec.omega * sq(x_of(i));
      break;
    case PotKind::Radial:
      for (std::size_t i = 0; i < M; ++i) {
        double x = x_of(i);
        v[i] = 0.5 * m * spec.omega * spec.omega * x * x +
               hbar * hbar * (spec.lambda * spec.lambda - 0.25) / (2.0 * m * x * x);
      }
      break;
    case PotKind::HalfLinear:
      for (std::size_t i = 0; i < M; ++i) {
        double x = x_of(i);
        v[i] = x > 0.0 ? spec.slope * x : spec.v_wall;
      }
      break;
    case PotKind::Linear:
      for (std::size_t i = 0; i < M; ++i) v[i] = spec.slope * x_of(i);
      break;
    case PotKind::InfiniteWell:
      for (std::size_t i = 0; i < M; ++i) {
        double x = x_of(i);
        v[i] = (x > 0.0 && x < spec.well_width) ? 0.0 : spec.v_wall;
      }
      break;
    case PotKind::PoschlTeller:
      for (std::size_t i = 0; i < M; ++i) {
        double x = x_of(i);
        if (x <= 0.0 || x >= 0.5 * PI) {
          v[i] = spec.v_wall;
        } else {
          double s = std::sin(x), c = std::cos(x);
          v[i] = hbar * hbar / (2.0 * m) *
                 ((spec.alpha * spec.alpha - 0.25) / (s * s) +
                  (spec.beta * spec.beta - 0.25) / (c * c));
          v[i] = std::min(v[i], spec.v_wall);
        }
      }
      break;
    case PotKind::Coulomb:
      for (std::size_t i = 0; i < M; ++i) v[i] = -spec.e1e2 / std::abs(x_of(i));
      break;
    case PotKind::Delta: {
      // -a/delta on the midpoint nearest 0 keeps sum V*delta = -a.
      std::size_t nearest = 0;
      double best = std::numeric_limits<double>::max();
      for (std::size_t i = 0; i < M; ++i) {
        double d = std::abs(x_of(i));
        if (d < best) {
          best = d;
          nearest = i;
        }
      }
      v[nearest] = -spec.strength / grid.delta();
      break;
    }
    case PotKind::FromGroundState: {
      std::vector<double> vg =
          potential_from_ground_state(spec.ground_samples, grid, spec.consts);
      for (std::size_t i = 0; i < M; ++i)
        v[i] = std::isnan(vg[i]) ? spec.v_wall : vg[i];
      break;
    }
  }
  return DiscreteHamiltonian{grid, std::move(v), spec.consts};
}

std::vector<double> potential_from_ground_state(const std::vector<double>& psi0,
                                                const gridpdf::Grid& grid,
                                                PhysConsts pc) {
  const std::size_t M = grid.size();
  if (psi0.size() != M)
    throw std::invalid_argument("potential_from_ground_state: sample count != grid");
  const double d2 = grid.delta() * grid.delta();
  const double coeff = pc.hbar * pc.hbar / (2.0 * pc.mass);
  std::vector<double> v(M, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i + 1 < M; ++i) {
    if (std::abs(psi0[i]) < 1e-10) continue;  // marked invalid
    double second = (psi0[i + 1] - 2.0 * psi0[i] + psi0[i - 1]) / d2;
    v[i] = coeff * second / psi0[i];
  }
  return v;
}

Eigen::MatrixXd dense_matrix(const DiscreteHamiltonian& h) {
  const auto M = static_cast<Eigen::Index>(h.grid.size());
  const double t = h.kinetic_coeff() / (h.grid.delta() * h.grid.delta());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(M, M);
  for (Eigen::Index i = 0; i < M; ++i) {
    H(i, i) = 2.0 * t + h.v_diag[static_cast<std::size_t>(i)];
    Eigen::Index up = (i + 1) % M, dn = (i + M - 1) % M;
    H(i, up) += -t;  // circulant wrap keeps QFT diagonalization exact
    H(i, dn) += -t;
  }
  return H;
}

EigenPairs dense_eigensystem(const DiscreteHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix(h));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_eigensystem: eigensolver failed");
  return EigenPairs{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace propload::ham

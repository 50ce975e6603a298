#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "propload/common.hpp"
#include "propload/gridpdf/grid.hpp"

namespace propload::ham {

enum class PotKind {
  Zero,
  Harmonic,      // (m/2) w^2 x^2
  Radial,        // (m/2) w^2 x^2 + hbar^2 (lambda^2 - 1/4) / (2 m x^2), x > 0
  HalfLinear,    // k x for x > 0, wall otherwise
  Linear,        // k x
  InfiniteWell,  // 0 on (0, a), wall otherwise
  PoschlTeller,  // hbar^2/2m [ (alpha^2-1/4)/sin^2 x + (beta^2-1/4)/cos^2 x ]
  Coulomb,       // -e1e2/|x|, x > 0
  Delta,         // -a delta(x): single-site well -a/delta at the midpoint nearest 0
  FromGroundState,
};

struct PotentialSpec {
  PotKind kind = PotKind::Zero;
  double omega = 1.0;
  double lambda = 1.0;
  double slope = 1.0;        // k for Linear / HalfLinear
  double well_width = 1.0;   // a for InfiniteWell
  double alpha = 0.5, beta = 0.5;  // Poschl-Teller
  double e1e2 = 1.0;         // Coulomb coupling
  double strength = 1.0;     // a for Delta
  std::vector<double> ground_samples;  // FromGroundState
  PhysConsts consts;
  double v_wall = 1e6;       // finite stand-in for hard walls

  static PotentialSpec zero();
  static PotentialSpec harmonic(double omega, PhysConsts pc = {});
  static PotentialSpec radial(double omega, double lambda, PhysConsts pc = {});
  static PotentialSpec half_linear(double k, PhysConsts pc = {});
  static PotentialSpec linear(double k, PhysConsts pc = {});
  static PotentialSpec infinite_well(double a, PhysConsts pc = {});
  static PotentialSpec poschl_teller(double alpha, double beta, PhysConsts pc = {});
  static PotentialSpec coulomb(double e1e2, PhysConsts pc = {});
  static PotentialSpec delta_well(double a, PhysConsts pc = {});
  static PotentialSpec from_ground_state(std::vector<double> psi0, PhysConsts pc = {});

  bool needs_positive_grid() const;
};

// H = (hbar^2/2m) Delta + V where Delta = (1/delta^2) L_circ and L_circ is
// the periodic (circulant) Laplacian, diagonal in the Fourier basis. The
// potential lives on the diagonal. At the paper's m=1/2 convention the
// kinetic prefactor reduces to the bare 1/delta^2 of its Delta.
struct DiscreteHamiltonian {
  gridpdf::Grid grid;
  std::vector<double> v_diag;
  PhysConsts consts;

  double kinetic_coeff() const {  // hbar^2/(2m)
    return consts.hbar * consts.hbar / (2.0 * consts.mass);
  }
  // kinetic_coeff() * laplacian_spectrum, in Fourier index order
  std::vector<double> kinetic_eigenvalues() const;
};

DiscreteHamiltonian build_potential(const PotentialSpec& spec,
                                    const gridpdf::Grid& grid);

// Bare Delta eigenvalues (1/delta^2) 2(1 - cos(2 pi j/2^N)), j = 0..2^N-1,
// in the order produced by the QFT.
std::vector<double> laplacian_spectrum(const gridpdf::Grid& grid);

// V_i = (hbar^2/2m) psi0''(x_i)/psi0(x_i) by central differences; entries where
// |psi0| < 1e-10 are NaN (marked invalid).
std::vector<double> potential_from_ground_state(const std::vector<double>& psi0,
                                                const gridpdf::Grid& grid,
                                                PhysConsts pc = {});

// Dense matrix (test/oracle support; also used by phase estimation setup).
Eigen::MatrixXd dense_matrix(const DiscreteHamiltonian& h);

// Lowest eigenpairs of the dense H.
struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns
};
EigenPairs dense_eigensystem(const DiscreteHamiltonian& h);

}  // namespace propload::ham

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "eee/eos.hpp"
#include "eee/grid.hpp"
#include "eee/state.hpp"

// The reduced Einstein-Euler-Entropy system in fluid source gauge written as
//   M^0 dz/dt + M^A dz/dx^A + L(z) = 0,  A = 1..3.
//
// Row map (one row per stored unknown, same order as the state layout):
//   frame e^A_b         torsion-free transport of the frame
//   Gamma_d^a_b, a < b  spatial connection
//   Gamma_0^0_a         fluid acceleration (sound-wave block, with the ones below)
//   Gamma_a^0_b         extrinsic part, carries an overall nu^2 factor
//   E_ab, B_ab          Bianchi equations, off-diagonal rows weighted by 2
//   rho, r, s, s_alpha  matter transport
namespace eee {

using Matrix52 = Eigen::Matrix<double, kStateSize, kStateSize>;
using Vector52 = Eigen::Matrix<double, kStateSize, 1>;

struct PrincipalMatrices {
  Matrix52 M[4];  // M[0] multiplies d/dt, M[1..3] multiply d/dx^1..3
};

class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, double min_eig)
      : std::runtime_error(what), min_eigenvalue(min_eig) {}
  double min_eigenvalue;
};

// Equation residuals at a point given the state and a full first-order jet
// (jet[0] = d/dt, jet[1..3] = d/dx^A). Affine in the jet. Rows are unweighted.
StateVec equation_rows(const StateVec& z, const StateJet& jet, const ThermoPoint& th, double kappa);

// Weight applied to each row to make the principal part symmetric.
double row_weight(int row);

// L(z): the rows with a vanishing jet (weighted).
StateVec lower_order(const StateVec& z, const ThermoPoint& th, double kappa);

// Symmetric M^A, A = 0..3. Throws std::domain_error if nu2 <= 0 or the
// thermodynamic state cannot be evaluated.
PrincipalMatrices assemble_principal(const StateVec& z, const EquationOfState& eos, double kappa);

// Thermodynamics of the stored (r, s) of a state.
ThermoPoint state_thermo(const StateVec& z, const EquationOfState& eos);

// dz/dt at a point from the state and its spatial derivatives (jet[1..3]),
// using the block structure of M^0. Throws PositivityError if the sound-wave
// block or the E/B block is not positive definite.
StateVec time_derivative_point(const StateVec& z, const StateJet& jet, const ThermoPoint& th,
                               double kappa);

// Same result through a dense factorization of the full M^0; used to validate
// the block path.
StateVec time_derivative_dense(const StateVec& z, const StateJet& jet, const EquationOfState& eos,
                               double kappa);

// Smallest eigenvalue of the symmetric M^0. With e0 = (e^0_1, e^0_2, e^0_3),
// M^0 is positive definite iff nu2 |e0|^2 < 1 (sound-wave block) and
// |e0|^2 < 1 (E/B block).
double m0_min_eigenvalue(const StateVec& z, const EquationOfState& eos, double kappa);

// dz/dt on the whole grid. Errors carry the failing point.
void time_derivative(const FieldSet& fs, const EquationOfState& eos, double kappa, FieldSet& out);

}  // namespace eee

#pragma once

#include <functional>
#include <vector>

#include "eee/diagnostics.hpp"
#include "eee/eos.hpp"
#include "eee/grid.hpp"

// Method-of-lines RK4 integration of the reduced system on the periodic grid.
namespace eee {

struct StepParams {
  double kappa = 1.0;
  double ko = 0.0;  // Kreiss-Oliger strength, in [0, 0.5]
};

// One classical RK4 step. Dissipation, when on, is added to every stage of
// all 52 components. Throws PositivityError if M0 loses definiteness and
// std::runtime_error on non-finite values.
FieldSet rk4_step(const FieldSet& fs, double dt, const EquationOfState& eos, const StepParams& sp);

// Largest admissible step for a light-cone bound on the characteristic speeds.
double cfl_timestep(const Grid& g, double cfl);

struct EvolutionParams {
  StepParams step;
  double t_final = 1.0;
  double dt = 0.0;  // 0: cfl * h
  double cfl = 0.25;
  int diag_every = 10;  // steps between diagnostic rows; 0 disables all but the first and last
  DiagnosticOptions diag;
};

struct Trajectory {
  std::vector<DiagnosticRow> diagnostics;
  FieldSet final_state;
  long steps = 0;
};

// Called after every accepted step (and once with step 0 for the initial state).
using StepObserver = std::function<void(const FieldSet&, long step)>;
// Called with each diagnostic row as soon as it is computed.
using DiagnosticObserver = std::function<void(const DiagnosticRow&)>;

// Integrates to t_final; the last step is shortened to land on it.
// Throws std::invalid_argument if dt exceeds the CFL bound.
Trajectory evolve(const FieldSet& initial, const EquationOfState& eos, const EvolutionParams& ep,
                  const StepObserver& observer = {}, const DiagnosticObserver& on_diag = {});

}  // namespace eee

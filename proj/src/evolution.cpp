#include "eee/evolution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eee/reduced_rhs.hpp"

namespace eee {

namespace {

// out = dz/dt + dissipation
void stage_rhs(const FieldSet& fs, const EquationOfState& eos, const StepParams& sp, FieldSet& out) {
  time_derivative(fs, eos, sp.kappa, out);
  if (sp.ko == 0.0) return;
  const Grid& g = fs.grid();
  const std::size_t N = fs.points();
  for (int c = 0; c < kStateSize; ++c) {
    const double* f = fs.component(c);
    double* o = out.component(c);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ip = 0; ip < static_cast<std::ptrdiff_t>(N); ++ip)
      o[ip] += ko_dissipation(g, f, sp.ko, static_cast<std::size_t>(ip));
  }
}

void axpy(FieldSet& y, const FieldSet& x, double a, const FieldSet& k) {
  auto& yd = y.raw();
  const auto& xd = x.raw();
  const auto& kd = k.raw();
  for (std::size_t i = 0; i < yd.size(); ++i) yd[i] = xd[i] + a * kd[i];
}

}  // namespace

double cfl_timestep(const Grid& g, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  return cfl * g.h();
}

FieldSet rk4_step(const FieldSet& fs, double dt, const EquationOfState& eos, const StepParams& sp) {
  if (!(sp.ko >= 0.0 && sp.ko <= 0.5)) throw std::invalid_argument("Kreiss-Oliger strength must lie in [0, 0.5]");
  const Grid& g = fs.grid();
  FieldSet k1(g), k2(g), k3(g), k4(g), tmp(g);
  stage_rhs(fs, eos, sp, k1);
  axpy(tmp, fs, 0.5 * dt, k1);
  tmp.t = fs.t + 0.5 * dt;
  stage_rhs(tmp, eos, sp, k2);
  axpy(tmp, fs, 0.5 * dt, k2);
  stage_rhs(tmp, eos, sp, k3);
  axpy(tmp, fs, dt, k3);
  tmp.t = fs.t + dt;
  stage_rhs(tmp, eos, sp, k4);
  FieldSet out(g);
  auto& o = out.raw();
  const auto &z = fs.raw(), &a = k1.raw(), &b = k2.raw(), &c = k3.raw(), &d = k4.raw();
  for (std::size_t i = 0; i < o.size(); ++i) {
    o[i] = z[i] + dt / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);
    if (!std::isfinite(o[i])) {
      const std::size_t N = fs.points();
      std::ostringstream os;
      os << "non-finite value in " << layout::component_name(static_cast<int>(i / N)) << " at point "
         << i % N << ", t=" << fs.t + dt;
      throw std::runtime_error(os.str());
    }
  }
  out.t = fs.t + dt;
  return out;
}

Trajectory evolve(const FieldSet& initial, const EquationOfState& eos, const EvolutionParams& ep,
                  const StepObserver& observer, const DiagnosticObserver& on_diag) {
  const Grid& g = initial.grid();
  const double bound = cfl_timestep(g, ep.cfl);
  const double dt = ep.dt > 0.0 ? ep.dt : bound;
  if (dt > bound * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dt=" << dt << " exceeds the CFL bound " << bound;
    throw std::invalid_argument(os.str());
  }
  if (!(ep.t_final >= initial.t)) throw std::invalid_argument("t_final precedes the initial time");

  Trajectory tr;
  FieldSet cur = initial;
  if (observer) observer(cur, 0);
  auto record = [&] {
    tr.diagnostics.push_back(compute_diagnostics(cur, eos, ep.step.kappa, ep.diag));
    if (on_diag) on_diag(tr.diagnostics.back());
  };
  record();
  const long nsteps = static_cast<long>(std::ceil((ep.t_final - initial.t) / dt - 1e-9));
  for (long s = 1; s <= nsteps; ++s) {
    const double h = s == nsteps ? ep.t_final - cur.t : dt;
    cur = rk4_step(cur, h, eos, ep.step);
    if (s == nsteps) cur.t = ep.t_final;
    if (observer) observer(cur, s);
    if (s == nsteps || (ep.diag_every > 0 && s % ep.diag_every == 0))
      record();
  }
  tr.steps = nsteps;
  tr.final_state = std::move(cur);
  return tr;
}

}  // namespace eee

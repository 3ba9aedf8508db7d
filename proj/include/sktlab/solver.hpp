#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sktlab/grid.hpp"
#include "sktlab/model.hpp"
#include "sktlab/monitors.hpp"

namespace sktlab {

enum class Scheme { explicit_euler, semi_implicit };

const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

struct SolverConfig {
  Scheme scheme = Scheme::semi_implicit;
  double dt_initial = 1e-3;
  double dt_max = 1e-2;
  double safety = 0.9;
  double floor = 1e-12;
  double blowup_threshold = 1e12;
  double t_end = 1.0;
  /// Use dt_max for every step (refinement studies, deliberate instability).
  bool fixed_dt = false;
  double linear_tolerance = 1e-10;
  /// Record a monitor row / snapshot every this many accepted steps
  /// (the initial and final states are always recorded).
  int monitor_every = 1;
  int snapshot_every = 0;  // 0: initial and final only
  /// p values for the Lp energy residual series.
  std::vector<double> lp_powers = {1.0, 2.0, 3.0};
  /// Lq norms whose running suprema are reported (inf allowed).
  std::vector<double> norm_powers;

  void validate() const;
  bool operator==(const SolverConfig&) const = default;
};

enum class Termination { completed, blow_up, solver_failure };

const char* to_string(Termination t);

/// Outcome of one step: clamp bookkeeping and the linear-solve mass defect.
struct StepInfo {
  std::size_t clamps = 0;
  /// Tau-weighted mass added by clamping (sum tau_i (floor - raw) vol).
  double clamp_mass = 0.0;
  /// Tau-weighted mass change caused by the linear-solve residual.
  double solver_mass = 0.0;
  int iterations = 0;
};

/// Raised by a step when the state leaves the finite range or a linear solve
/// does not converge.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(Termination kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Termination kind() const { return kind_; }

 private:
  Termination kind_;
};

struct RunResult {
  std::vector<StateField> snapshots;
  MonitorBundle monitors;
  Termination termination = Termination::completed;
  std::string message;
  std::size_t steps = 0;
  std::size_t clamp_count = 0;
};

/// Laplacian of w_i = d_i(u) u_i with zero-flux mirror boundary.
std::vector<double> discrete_flux_divergence(const ModelSpec& m, const Grid& g, const StateField& s, int species);

StateField step_explicit(const ModelSpec& m, const Grid& g, const StateField& s, double dt, double floor = 1e-12,
                         StepInfo* info = nullptr);

/// Freezes d at the old level and solves, per species,
/// (tau_i/dt) u - Lap(d_i(u^n) u) = (tau_i/dt) u^n + f_i(u^n)
/// through the symmetric substitution v = d_i(u^n) u.
StateField step_semi_implicit(const ModelSpec& m, const Grid& g, const StateField& s, double dt,
                              double floor = 1e-12, double tolerance = 1e-10, StepInfo* info = nullptr);

double suggest_dt(const ModelSpec& m, const Grid& g, const StateField& s, const SolverConfig& cfg);

RunResult run(const ModelSpec& m, const Grid& g, const StateField& u0, const SolverConfig& cfg);

}  // namespace sktlab

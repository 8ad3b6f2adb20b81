#pragma once

// Implicit midpoint time stepping of the coupled system
//
//   i u_t + u_xx = (|u|^(2p) + beta |v|^(p+1) |u|^(p-1)) u
//   i v_t + v_xx = (|v|^(2p) + beta |u|^(p+1) |v|^(p-1)) v
//
// with the nonlinear terms written as discrete difference quotients so that
// dx sum |u|^2, dx sum |v|^2 and the discrete energy are conserved. The
// implicit equations are resolved by Picard iteration; every sweep solves one
// tridiagonal system per field.

#include <cstddef>
#include <memory>

#include "gnls/diagnostics.hpp"
#include "gnls/grid.hpp"
#include "gnls/tridiag.hpp"
#include "gnls/types.hpp"

namespace gnls {

struct SchemeParams {
  int p = 3;
  double beta = 1.0;
  double dt = 0.1;
  double picard_tol = 1e-12;
  int picard_max_iters = 100;
  double t_final = 1.0;
};

inline constexpr double kDefaultPicardTol = 1e-12;
inline constexpr int kDefaultPicardMaxIters = 100;

/// Checks the run-level invariants: p odd >= 1, 0 < dt < 1,
/// picard_tol >= 10 eps, picard_max_iters >= 1, t_final > 0.
/// Throws Errc::validation_error naming the offending field.
void validate(const SchemeParams& params);

struct StepReport {
  int picard_iters = 0;
  double final_increment = 0.0;  // max-norm of the last Picard increment
  double linear_residual = 0.0;  // worst tridiagonal residual over the step
};

struct StepResult {
  FieldPair state;
  StepReport report;
};

/// Reusable storage for stepping one grid size. Not thread-safe; use one
/// per run.
class Stepper {
 public:
  Stepper(const Grid& grid, const SchemeParams& params);
  ~Stepper();
  Stepper(Stepper&&) noexcept;
  Stepper& operator=(Stepper&&) noexcept;

  /// Advances state by params.dt. A negative dt steps backwards with the
  /// same scheme. Throws Errc::picard_diverged or Errc::singular_pivot.
  StepResult step(const FieldPair& state);

  const Grid& grid() const noexcept { return grid_; }
  const SchemeParams& params() const noexcept { return params_; }

 private:
  struct Workspace;
  Grid grid_;
  SchemeParams params_;
  std::unique_ptr<Workspace> ws_;
};

/// One step with a fresh workspace.
StepResult step(const FieldPair& state, const SchemeParams& params,
                const Grid& grid);

/// Receives the output of evolve. Called from the evolving thread only.
class EvolutionSink {
 public:
  virtual ~EvolutionSink() = default;
  virtual void record(const DiagnosticsRecord& rec) = 0;
  virtual void step_done(std::size_t /*step*/, const StepReport& /*report*/) {}
  virtual void snapshot(const FieldPair& /*state*/, std::size_t /*step*/) {}
};

struct EvolveOptions {
  std::size_t sample_every = 1;
  std::size_t snapshot_every = 0;  // 0 disables snapshots
  int j_order = 0;                 // 0 disables the J-norm columns
};

/// Number of steps evolve takes from t0 to t_final (ceil, ignoring
/// round-off of a whole number of steps).
std::size_t step_count(double t0, double t_final, double dt);

/// Steps from initial.t until t_final. Emits a record for the initial state,
/// then after every sample_every-th step and after the last step; snapshots
/// likewise with snapshot_every. Step errors are rethrown with the step
/// index and time prepended.
FieldPair evolve(const FieldPair& initial, const SchemeParams& params,
                 const Grid& grid, const EvolveOptions& options,
                 EvolutionSink& sink);

}  // namespace gnls

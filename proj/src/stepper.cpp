#include "gnls/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <utility>

#include "gnls/error.hpp"
#include "gnls/kernels.hpp"
#include "gnls/nonlinear.hpp"

namespace gnls {

namespace kp = kernels::parallel;

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(Errc::validation_error, "scheme." + what);
}

void check_state(const FieldPair& state, const Grid& grid) {
  if (state.u.size() != grid.n_points || state.v.size() != grid.n_points)
    throw Error(Errc::length_mismatch, "step: fields do not match the grid");
}

}  // namespace

void validate(const SchemeParams& params) {
  if (params.p < 1 || params.p % 2 == 0)
    invalid("p must be an odd integer >= 1, got " + std::to_string(params.p));
  if (!std::isfinite(params.beta)) invalid("beta must be finite");
  if (!(params.dt > 0.0) || !(params.dt < 1.0))
    invalid("dt must satisfy 0 < dt < 1, got " + std::to_string(params.dt));
  if (!(params.picard_tol >= 10.0 * std::numeric_limits<double>::epsilon()))
    invalid("picard_tol must be >= 10 machine epsilon");
  if (params.picard_max_iters < 1) invalid("picard_max_iters must be >= 1");
  if (!(params.t_final > 0.0) || !std::isfinite(params.t_final))
    invalid("t_final must be positive");
}

struct Stepper::Workspace {
  explicit Workspace(std::size_t n)
      : sys_u(n), sys_v(n), u_iter(n), v_iter(n), u_next(n), v_next(n),
        scratch_u(n), scratch_v(n), wu_self(n), wu_cross(n), wv_self(n),
        wv_cross(n) {}

  TridiagonalSystem sys_u, sys_v;
  Field u_iter, v_iter, u_next, v_next;
  Field scratch_u, scratch_v;
  std::vector<double> wu_self, wu_cross, wv_self, wv_cross;
};

Stepper::Stepper(const Grid& grid, const SchemeParams& params)
    : grid_(grid), params_(params),
      ws_(std::make_unique<Workspace>(grid.n_points)) {
  require_odd_power(params.p);
  if (params.dt == 0.0 || !(std::abs(params.dt) < 1.0))
    throw Error(Errc::invalid_argument, "step: need 0 < |dt| < 1");
  if (!(params.picard_tol > 0.0) || params.picard_max_iters < 1)
    throw Error(Errc::invalid_argument, "step: invalid Picard settings");
}

Stepper::~Stepper() = default;
Stepper::Stepper(Stepper&&) noexcept = default;
Stepper& Stepper::operator=(Stepper&&) noexcept = default;

namespace {

kernels::SystemView view(TridiagonalSystem& sys) {
  return {sys.sub, sys.main, sys.sup, sys.rhs};
}

void solve_system(TridiagonalSystem& sys, Field& x, Field& scratch) {
  solve_into(sys.sub, sys.main, sys.sup, sys.rhs, x, scratch);
}

}  // namespace

StepResult Stepper::step(const FieldPair& state) {
  check_state(state, grid_);
  Workspace& ws = *ws_;
  const int p = params_.p;
  const double beta = params_.beta;
  const double dt = params_.dt;
  const double dx = grid_.dx;

  // Picard starts from the previous time level
  ws.u_iter = state.u;
  ws.v_iter = state.v;

  StepReport report;
  for (int it = 1; it <= params_.picard_max_iters; ++it) {
    // Coefficients of both equations are frozen at the same iterate.
    kp::nonlinear_coeffs(state.u, ws.u_iter, state.v, ws.v_iter, p, beta,
                         ws.wu_self, ws.wu_cross);
    kp::nonlinear_coeffs(state.v, ws.v_iter, state.u, ws.u_iter, p, beta,
                         ws.wv_self, ws.wv_cross);
    kp::midpoint_system(state.u, ws.wu_self, ws.wu_cross, dt, dx,
                        view(ws.sys_u));
    kp::midpoint_system(state.v, ws.wv_self, ws.wv_cross, dt, dx,
                        view(ws.sys_v));

    std::exception_ptr err_u, err_v;
#pragma omp parallel sections
    {
#pragma omp section
      {
        try {
          solve_system(ws.sys_u, ws.u_next, ws.scratch_u);
        } catch (...) {
          err_u = std::current_exception();
        }
      }
#pragma omp section
      {
        try {
          solve_system(ws.sys_v, ws.v_next, ws.scratch_v);
        } catch (...) {
          err_v = std::current_exception();
        }
      }
    }
    if (err_u) std::rethrow_exception(err_u);
    if (err_v) std::rethrow_exception(err_v);

    const double res =
        std::max(residual(ws.sys_u.sub, ws.sys_u.main, ws.sys_u.sup,
                          ws.sys_u.rhs, ws.u_next),
                 residual(ws.sys_v.sub, ws.sys_v.main, ws.sys_v.sup,
                          ws.sys_v.rhs, ws.v_next));
    const double increment = std::max(kp::max_abs_diff(ws.u_next, ws.u_iter),
                                      kp::max_abs_diff(ws.v_next, ws.v_iter));
    ws.u_iter.swap(ws.u_next);
    ws.v_iter.swap(ws.v_next);

    report.picard_iters = it;
    report.final_increment = increment;
    report.linear_residual = std::max(report.linear_residual, res);

    if (!std::isfinite(increment)) break;
    if (increment < params_.picard_tol) {
      return {FieldPair{ws.u_iter, ws.v_iter, state.t + dt}, report};
    }
  }

  std::ostringstream msg;
  msg.precision(6);
  msg << "Picard iteration did not converge after " << report.picard_iters
      << " sweeps (increment " << report.final_increment << ", tolerance "
      << params_.picard_tol << ")";
  throw Error(Errc::picard_diverged, msg.str());
}

StepResult step(const FieldPair& state, const SchemeParams& params,
                const Grid& grid) {
  Stepper stepper(grid, params);
  return stepper.step(state);
}

std::size_t step_count(double t0, double t_final, double dt) {
  if (!(t_final >= t0))
    throw Error(Errc::invalid_argument, "evolve: t_final precedes the start");
  const double ratio = (t_final - t0) / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio))
    return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(ratio));
}

FieldPair evolve(const FieldPair& initial, const SchemeParams& params,
                 const Grid& grid, const EvolveOptions& options,
                 EvolutionSink& sink) {
  if (options.sample_every < 1)
    throw Error(Errc::invalid_argument, "evolve: sample_every must be >= 1");
  check_state(initial, grid);
  const std::size_t n_steps = step_count(initial.t, params.t_final, params.dt);

  auto emit = [&](const FieldPair& state, int iters) {
    sink.record(make_record(state, grid, params.p, params.beta,
                            options.j_order, iters));
  };
  auto due = [n_steps](std::size_t k, std::size_t every) {
    return every > 0 && (k % every == 0 || k == n_steps);
  };

  emit(initial, 0);
  if (options.snapshot_every > 0) sink.snapshot(initial, 0);
  if (n_steps == 0) return initial;

  Stepper stepper(grid, params);
  FieldPair state = initial;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    StepResult result;
    try {
      result = stepper.step(state);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "step " << k << " (t=" << state.t << "): " << e.what();
      throw Error(e.code(), msg.str());
    }
    sink.step_done(k, result.report);
    state = std::move(result.state);
    // times are t0 + k dt, not accumulated sums
    state.t = initial.t + static_cast<double>(k) * params.dt;
    if (due(k, options.sample_every)) emit(state, result.report.picard_iters);
    if (due(k, options.snapshot_every)) sink.snapshot(state, k);
  }
  return state;
}

}  // namespace gnls

#include "gnls/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnls/error.hpp"
#include "gnls/kernels.hpp"
#include "gnls/nonlinear.hpp"

namespace gnls {

namespace kp = kernels::parallel;

double mass(std::span<const cplx> f, double dx) {
  return dx * kp::sum_abs_pow(f, 2.0);
}

double lp_norm(std::span<const cplx> f, double dx, double q) {
  if (!(q >= 1.0))
    throw Error(Errc::invalid_argument,
                "lp_norm: q must be >= 1, got " + std::to_string(q));
  const double s = dx * kp::sum_abs_pow(f, q);
  if (q == 2.0) return std::sqrt(s);
  return std::pow(s, 1.0 / q);
}

double linf_norm(std::span<const cplx> f) {
  if (f.empty()) throw Error(Errc::invalid_argument, "linf_norm: empty field");
  return kp::max_abs(f);
}

double energy(const FieldPair& pair, const Grid& grid, int p, double beta) {
  require_odd_power(p);
  if (pair.u.size() != grid.n_points || pair.v.size() != grid.n_points)
    throw Error(Errc::length_mismatch, "energy: fields do not match the grid");
  const double dx = grid.dx;
  const double q = 2.0 * (p + 1);
  const double inv = 1.0 / (p + 1);
  const double grad_u = dx * kp::sum_abs_pow(d_plus(pair.u, grid), 2.0);
  const double grad_v = dx * kp::sum_abs_pow(d_plus(pair.v, grid), 2.0);
  const double pot_u = dx * kp::sum_abs_pow(pair.u, q);
  const double pot_v = dx * kp::sum_abs_pow(pair.v, q);
  const double coupling = dx * kp::coupling_sum(pair.u, pair.v, p);
  return grad_u + grad_v + inv * pot_u + inv * pot_v +
         2.0 * beta * inv * coupling;
}

namespace {

void check_order(int m) {
  if (m < 1 || m > kMaxJOrder)
    throw Error(Errc::invalid_argument,
                "j_norm: order m must be in [1, " + std::to_string(kMaxJOrder) +
                    "], got " + std::to_string(m));
}

}  // namespace

double j_norm(std::span<const cplx> f, const Grid& grid, double t, int m) {
  check_order(m);
  if (t == 0.0)
    throw Error(Errc::invalid_argument,
                "j_norm: undefined at t = 0, use j_norm_initial");
  if (f.size() != grid.n_points)
    throw Error(Errc::length_mismatch, "j_norm: field does not match the grid");
  Field cur(f.begin(), f.end());
  Field next(f.size());
  for (int k = 0; k < m; ++k) {
    kp::j_apply(cur, grid.x0, grid.dx, t, next);
    cur.swap(next);
  }
  return std::sqrt(mass(cur, grid.dx));
}

double j_norm_initial(std::span<const cplx> f, const Grid& grid, int m) {
  check_order(m);
  if (f.size() != grid.n_points)
    throw Error(Errc::length_mismatch, "j_norm: field does not match the grid");
  Field weighted(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    weighted[j] = ipow(grid.x(j), m) * f[j];
  return std::sqrt(mass(weighted, grid.dx));
}

DiagnosticsRecord make_record(const FieldPair& pair, const Grid& grid, int p,
                              double beta, int j_order, int picard_iters) {
  DiagnosticsRecord rec;
  const double q = 2.0 * (p + 1);
  rec.t = pair.t;
  rec.mass_u = mass(pair.u, grid.dx);
  rec.mass_v = mass(pair.v, grid.dx);
  rec.energy = energy(pair, grid, p, beta);
  rec.linf_u = linf_norm(pair.u);
  rec.linf_v = linf_norm(pair.v);
  rec.l2p2_u = lp_norm(pair.u, grid.dx, q);
  rec.l2p2_v = lp_norm(pair.v, grid.dx, q);
  if (j_order > 0) {
    if (pair.t == 0.0) {
      rec.j_norm_u = j_norm_initial(pair.u, grid, j_order);
      rec.j_norm_v = j_norm_initial(pair.v, grid, j_order);
    } else {
      rec.j_norm_u = j_norm(pair.u, grid, pair.t, j_order);
      rec.j_norm_v = j_norm(pair.v, grid, pair.t, j_order);
    }
  }
  rec.picard_iters = picard_iters;
  return rec;
}

DecayFit fit_decay(std::span<const Sample> samples, double t_min,
                   double t_max) {
  if (!(t_min >= 0.0) || !(t_max > t_min))
    throw Error(Errc::invalid_argument, "fit_decay: need 0 <= t_min < t_max");

  std::vector<double> lx;
  std::vector<double> ly;
  DecayFit fit;
  for (const Sample& s : samples) {
    if (!(s.t > t_min && s.t <= t_max)) continue;
    if (!(s.value > 0.0))
      throw Error(Errc::nonpositive_value,
                  "fit_decay: value " + std::to_string(s.value) + " at t=" +
                      std::to_string(s.t) + " is not positive");
    if (lx.empty()) fit.t_min = s.t;
    fit.t_max = s.t;
    lx.push_back(std::log(s.t));
    ly.push_back(std::log(s.value));
  }
  if (lx.size() < kMinFitSamples)
    throw Error(Errc::insufficient_samples,
                "fit_decay: " + std::to_string(lx.size()) +
                    " samples in window, need " +
                    std::to_string(kMinFitSamples));

  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double dx = lx[i] - mx;
    const double dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0))
    throw Error(Errc::insufficient_samples,
                "fit_decay: all samples share one time");
  const bool flat = std::all_of(ly.begin(), ly.end(),
                                [&](double y) { return y == ly.front(); });
  if (flat) {
    fit.slope = 0.0;
    fit.intercept = ly.front();
    fit.n_samples = lx.size();
    fit.r_squared = 1.0;
    return fit;
  }

  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_samples = lx.size();
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace gnls

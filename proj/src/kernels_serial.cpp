#include <algorithm>
#include <cmath>
#include <limits>

#include "gnls/kernels.hpp"
#include "kernel_detail.hpp"

namespace gnls::kernels::serial {

void d_plus(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = detail::d_plus_at(f, dx, j);
}

void d_minus(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = detail::d_minus_at(f, dx, j);
}

void d_center(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = detail::d_center_at(f, dx, j);
}

void d_xx(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = detail::d_xx_at(f, dx, j);
}

void nonlinear_coeffs(std::span<const cplx> u_old, std::span<const cplx> u_new,
                      std::span<const cplx> v_old, std::span<const cplx> v_new,
                      int p, double beta, std::span<double> w_self,
                      std::span<double> w_cross) {
  for (std::size_t j = 0; j < u_old.size(); ++j)
    detail::nonlinear_at(u_old[j], u_new[j], v_old[j], v_new[j], p, beta,
                         w_self[j], w_cross[j]);
}

void midpoint_system(std::span<const cplx> u_old,
                     std::span<const double> w_self,
                     std::span<const double> w_cross, double dt, double dx,
                     SystemView out) {
  for (std::size_t j = 0; j < u_old.size(); ++j)
    detail::midpoint_row_at(u_old, w_self, w_cross, dt, dx, out, j);
}

void j_apply(std::span<const cplx> f, double x0, double dx, double t,
             std::span<cplx> out) {
  const cplx two_it{0.0, 2.0 * t};
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = x0 + static_cast<double>(j) * dx;
    out[j] = x * f[j] + two_it * detail::d_center_at(f, dx, j);
  }
}

double sum_abs_pow(std::span<const cplx> f, double q) {
  double sum = 0.0;
  for (const cplx z : f) sum += detail::abs_pow(z, q);
  return sum;
}

double coupling_sum(std::span<const cplx> u, std::span<const cplx> v, int p) {
  double sum = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j)
    sum += detail::coupling_at(u[j], v[j], p);
  return sum;
}

double max_abs(std::span<const cplx> f) {
  double m = 0.0;
  bool nan = false;
  for (const cplx z : f) {
    const double r = std::abs(z);
    nan = nan || std::isnan(r);
    m = std::max(m, r);
  }
  return nan ? std::numeric_limits<double>::quiet_NaN() : m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  bool nan = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double r = std::abs(a[j] - b[j]);
    nan = nan || std::isnan(r);
    m = std::max(m, r);
  }
  return nan ? std::numeric_limits<double>::quiet_NaN() : m;
}

}  // namespace gnls::kernels::serial

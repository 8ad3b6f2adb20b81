#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#ifdef GNLS_HAVE_OPENMP
#include <omp.h>
#endif

#include "gnls/kernels.hpp"
#include "kernel_detail.hpp"

namespace gnls::kernels {

int thread_count() noexcept {
#ifdef GNLS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

using index_t = std::int64_t;

// Sums body(j) over [0, n) in fixed blocks of kReduceBlock; the partials are
// combined in block order so the result is independent of the thread count.
template <class Body>
double blocked_sum(std::size_t n, Body body) {
  const auto blocks = static_cast<index_t>((n + kReduceBlock - 1) / kReduceBlock);
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
  for (index_t b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t hi = std::min(n, lo + kReduceBlock);
    double s = 0.0;
    for (std::size_t j = lo; j < hi; ++j) s += body(j);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double sum = 0.0;
  for (const double s : partial) sum += s;
  return sum;
}

template <class Body>
double nan_aware_max(std::size_t n, Body body) {
  double m = 0.0;
  int nan = 0;
  const auto count = static_cast<index_t>(n);
#pragma omp parallel for schedule(static) reduction(max : m) reduction(| : nan)
  for (index_t j = 0; j < count; ++j) {
    const double r = body(static_cast<std::size_t>(j));
    nan |= std::isnan(r) ? 1 : 0;
    m = std::max(m, r);
  }
  return nan ? std::numeric_limits<double>::quiet_NaN() : m;
}

template <class Body>
void for_each_node(std::size_t n, Body body) {
  const auto count = static_cast<index_t>(n);
#pragma omp parallel for schedule(static)
  for (index_t j = 0; j < count; ++j) body(static_cast<std::size_t>(j));
}

}  // namespace

namespace parallel {

void d_plus(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for_each_node(f.size(), [&](std::size_t j) { out[j] = detail::d_plus_at(f, dx, j); });
}

void d_minus(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for_each_node(f.size(), [&](std::size_t j) { out[j] = detail::d_minus_at(f, dx, j); });
}

void d_center(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for_each_node(f.size(), [&](std::size_t j) { out[j] = detail::d_center_at(f, dx, j); });
}

void d_xx(std::span<const cplx> f, double dx, std::span<cplx> out) {
  for_each_node(f.size(), [&](std::size_t j) { out[j] = detail::d_xx_at(f, dx, j); });
}

void nonlinear_coeffs(std::span<const cplx> u_old, std::span<const cplx> u_new,
                      std::span<const cplx> v_old, std::span<const cplx> v_new,
                      int p, double beta, std::span<double> w_self,
                      std::span<double> w_cross) {
  for_each_node(u_old.size(), [&](std::size_t j) {
    detail::nonlinear_at(u_old[j], u_new[j], v_old[j], v_new[j], p, beta,
                         w_self[j], w_cross[j]);
  });
}

void midpoint_system(std::span<const cplx> u_old,
                     std::span<const double> w_self,
                     std::span<const double> w_cross, double dt, double dx,
                     SystemView out) {
  for_each_node(u_old.size(), [&](std::size_t j) {
    detail::midpoint_row_at(u_old, w_self, w_cross, dt, dx, out, j);
  });
}

void j_apply(std::span<const cplx> f, double x0, double dx, double t,
             std::span<cplx> out) {
  const cplx two_it{0.0, 2.0 * t};
  for_each_node(f.size(), [&](std::size_t j) {
    const double x = x0 + static_cast<double>(j) * dx;
    out[j] = x * f[j] + two_it * detail::d_center_at(f, dx, j);
  });
}

double sum_abs_pow(std::span<const cplx> f, double q) {
  return blocked_sum(f.size(), [&](std::size_t j) { return detail::abs_pow(f[j], q); });
}

double coupling_sum(std::span<const cplx> u, std::span<const cplx> v, int p) {
  return blocked_sum(u.size(),
                     [&](std::size_t j) { return detail::coupling_at(u[j], v[j], p); });
}

double max_abs(std::span<const cplx> f) {
  return nan_aware_max(f.size(), [&](std::size_t j) { return std::abs(f[j]); });
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  return nan_aware_max(a.size(), [&](std::size_t j) { return std::abs(a[j] - b[j]); });
}

}  // namespace parallel
}  // namespace gnls::kernels

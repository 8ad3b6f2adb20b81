#pragma once

// Per-node expressions shared by the serial and parallel kernels. Keeping a
// single definition is what makes the two variants bit-identical.

#include <cmath>
#include <cstddef>
#include <span>

#include "gnls/kernels.hpp"
#include "gnls/nonlinear.hpp"
#include "gnls/types.hpp"

namespace gnls::kernels::detail {

inline cplx at_or_zero(std::span<const cplx> f, std::ptrdiff_t j) {
  if (j < 0 || j >= static_cast<std::ptrdiff_t>(f.size())) return {};
  return f[static_cast<std::size_t>(j)];
}

inline cplx d_plus_at(std::span<const cplx> f, double dx, std::size_t j) {
  const auto jj = static_cast<std::ptrdiff_t>(j);
  return (at_or_zero(f, jj + 1) - f[j]) / dx;
}

inline cplx d_minus_at(std::span<const cplx> f, double dx, std::size_t j) {
  const auto jj = static_cast<std::ptrdiff_t>(j);
  return (f[j] - at_or_zero(f, jj - 1)) / dx;
}

inline cplx d_center_at(std::span<const cplx> f, double dx, std::size_t j) {
  const auto jj = static_cast<std::ptrdiff_t>(j);
  return (at_or_zero(f, jj + 1) - at_or_zero(f, jj - 1)) / (2.0 * dx);
}

// d_plus applied to d_minus(f); the ghost beyond the right end is a zero of
// d_minus(f), matching the literal composition.
inline cplx d_xx_at(std::span<const cplx> f, double dx, std::size_t j) {
  const cplx right =
      j + 1 < f.size() ? d_minus_at(f, dx, j + 1) : cplx{};
  return (right - d_minus_at(f, dx, j)) / dx;
}

inline void nonlinear_at(cplx u_old, cplx u_new, cplx v_old, cplx v_new, int p,
                         double beta, double& w_self, double& w_cross) {
  const double a = std::norm(u_new);
  const double b = std::norm(u_old);
  const int h = (p + 1) / 2;
  const double inv = 1.0 / static_cast<double>(p + 1);
  w_self = ratio_even(a, b, p) * inv;
  const double v_sum = ipow(std::norm(v_new), h) + ipow(std::norm(v_old), h);
  w_cross = beta * v_sum * ratio_half(a, b, p) * inv;
}

// True if node j is one of the pinned boundary nodes 0, n-2, n-1.
inline bool is_pinned(std::size_t j, std::size_t n) {
  return j == 0 || j + 2 >= n;
}

inline void midpoint_row_at(std::span<const cplx> u_old,
                            std::span<const double> w_self,
                            std::span<const double> w_cross, double dt,
                            double dx, SystemView out, std::size_t j) {
  const std::size_t n = u_old.size();
  if (is_pinned(j, n)) {
    if (j > 0) out.sub[j - 1] = 0.0;
    if (j + 1 < n) out.sup[j] = 0.0;
    out.main[j] = 1.0;
    out.rhs[j] = 0.0;
    return;
  }
  const double off = 0.5 / (dx * dx);
  const double half_w = 0.5 * (w_self[j] + w_cross[j]);
  const cplx i_dt{0.0, 1.0 / dt};
  out.sub[j - 1] = off;
  out.sup[j] = off;
  out.main[j] = i_dt - 2.0 * off - half_w;
  out.rhs[j] = (i_dt + 2.0 * off + half_w) * u_old[j] -
               off * (u_old[j + 1] + u_old[j - 1]);
}

inline double abs_pow(cplx z, double q) {
  if (q == 2.0) return std::norm(z);
  const double half = q / 2.0;
  if (half == std::floor(half) && half <= 64.0)
    return ipow(std::norm(z), static_cast<int>(half));
  return std::pow(std::abs(z), q);
}

inline double coupling_at(cplx u, cplx v, int p) {
  const int h = (p + 1) / 2;
  return ipow(std::norm(u), h) * ipow(std::norm(v), h);
}

}  // namespace gnls::kernels::detail

#pragma once

// Data-parallel inner loops of the solver.
//
// Every kernel exists twice with identical signatures: `serial` is the plain
// reference loop kept for testing and benchmarking, `parallel` is the OpenMP
// version the library actually calls. Elementwise kernels evaluate the same
// expression per node in both variants, so their outputs are bit-identical.
// Reductions in `parallel` sum fixed-size blocks and then combine the block
// partials left to right; the result depends only on the input, never on the
// thread count, but may differ from `serial` in the last few ulps.

#include <cstddef>
#include <span>

#include "gnls/types.hpp"

namespace gnls::kernels {

/// Number of elements per partial sum in the blocked parallel reductions.
inline constexpr std::size_t kReduceBlock = 2048;

/// Output spans of one tridiagonal system (sub/sup have length n-1).
struct SystemView {
  std::span<cplx> sub;
  std::span<cplx> main;
  std::span<cplx> sup;
  std::span<cplx> rhs;
};

#define GNLS_KERNEL_DECLS                                                      \
  void d_plus(std::span<const cplx> f, double dx, std::span<cplx> out);        \
  void d_minus(std::span<const cplx> f, double dx, std::span<cplx> out);       \
  void d_center(std::span<const cplx> f, double dx, std::span<cplx> out);      \
  void d_xx(std::span<const cplx> f, double dx, std::span<cplx> out);          \
  void nonlinear_coeffs(std::span<const cplx> u_old,                           \
                        std::span<const cplx> u_new,                           \
                        std::span<const cplx> v_old,                           \
                        std::span<const cplx> v_new, int p, double beta,       \
                        std::span<double> w_self, std::span<double> w_cross);  \
  void midpoint_system(std::span<const cplx> u_old,                            \
                       std::span<const double> w_self,                         \
                       std::span<const double> w_cross, double dt, double dx,  \
                       SystemView out);                                        \
  void j_apply(std::span<const cplx> f, double x0, double dx, double t,        \
               std::span<cplx> out);                                           \
  double sum_abs_pow(std::span<const cplx> f, double q);                       \
  double coupling_sum(std::span<const cplx> u, std::span<const cplx> v,        \
                      int p);                                                  \
  double max_abs(std::span<const cplx> f);                                     \
  double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

// Stencils use ghost value 0 beyond both ends of the array. d_xx is computed
// as d_plus(d_minus(f)) node by node, bit-for-bit.
//
// nonlinear_coeffs writes the scalars multiplying (u_new + u_old)/2 in the
// midpoint scheme: w_self = S_p(A,B)/(p+1) and
// w_cross = beta (|v_new|^(p+1) + |v_old|^(p+1)) H_p(A,B)/(p+1),
// with A = |u_new|^2, B = |u_old|^2, S_p = ratio_even and H_p = ratio_half.
//
// midpoint_system assembles
//   [i/dt + D2/2 - W/2] u_new = [i/dt - D2/2 + W/2] u_old,  W = w_self+w_cross
// with identity rows at nodes 0, n-2 and n-1.
//
// j_apply evaluates (x + 2it d/dx) f with the centered difference.
//
// sum_abs_pow returns sum_j |f_j|^q; coupling_sum returns
// sum_j |u_j|^(p+1) |v_j|^(p+1).
namespace serial {
GNLS_KERNEL_DECLS
}  // namespace serial

namespace parallel {
GNLS_KERNEL_DECLS
}  // namespace parallel

#undef GNLS_KERNEL_DECLS

/// Threads the parallel kernels will use (1 without OpenMP).
int thread_count() noexcept;

}  // namespace gnls::kernels

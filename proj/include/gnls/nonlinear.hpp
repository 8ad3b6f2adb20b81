#pragma once

// Discrete nonlinear coefficients of the conservative midpoint scheme.
//
// The scheme writes the self-interaction as the difference quotient
//   (|u'|^(2p+2) - |u|^(2p+2)) / (|u'|^2 - |u|^2)
// and the coupling through (|u'|^(p+1) - |u|^(p+1)) / (|u'|^2 - |u|^2).
// Both are polynomials in A = |u'|^2 and B = |u|^2 once the common factor is
// cancelled, so they are evaluated here in that form: no division, and the
// removable 0/0 at A == B is handled without a special case.

#include <span>

#include "gnls/types.hpp"

namespace gnls {

/// sum_{k=0}^{p} A^k B^(p-k), i.e. (A^(p+1) - B^(p+1)) / (A - B).
constexpr double ratio_even(double a, double b, int p) noexcept {
  double sum = 1.0;
  double b_pow = 1.0;
  for (int k = 1; k <= p; ++k) {
    b_pow *= b;
    sum = sum * a + b_pow;
  }
  return sum;
}

/// sum_{k=0}^{(p-1)/2} A^k B^((p-1)/2-k), i.e.
/// (A^((p+1)/2) - B^((p+1)/2)) / (A - B). Requires odd p.
constexpr double ratio_half(double a, double b, int p) noexcept {
  return ratio_even(a, b, (p - 1) / 2);
}

/// Per-node scalars multiplying (u_new + u_old)/2 on the right-hand side of
/// one field's equation.
struct NonlinCoeffs {
  std::vector<double> self_coeff;
  std::vector<double> cross_coeff;
};

/// Throws Errc::invalid_argument unless p is an odd integer >= 1.
void require_odd_power(int p);

/// Coefficients for the u-equation; call with (v_old, v_new, u_old, u_new)
/// for the v-equation.
NonlinCoeffs assemble_coeffs(std::span<const cplx> u_old,
                             std::span<const cplx> u_new,
                             std::span<const cplx> v_old,
                             std::span<const cplx> v_new, int p, double beta);

}  // namespace gnls

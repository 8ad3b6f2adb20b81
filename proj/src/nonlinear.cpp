#include "gnls/nonlinear.hpp"

#include <string>

#include "gnls/error.hpp"
#include "gnls/kernels.hpp"

namespace gnls {

void require_odd_power(int p) {
  if (p < 1 || p % 2 == 0)
    throw Error(Errc::invalid_argument,
                "nonlinearity power p must be an odd integer >= 1, got " +
                    std::to_string(p));
}

NonlinCoeffs assemble_coeffs(std::span<const cplx> u_old,
                             std::span<const cplx> u_new,
                             std::span<const cplx> v_old,
                             std::span<const cplx> v_new, int p, double beta) {
  require_odd_power(p);
  const std::size_t n = u_old.size();
  if (u_new.size() != n || v_old.size() != n || v_new.size() != n)
    throw Error(Errc::length_mismatch,
                "assemble_coeffs: fields must share one length");
  NonlinCoeffs c{std::vector<double>(n), std::vector<double>(n)};
  kernels::parallel::nonlinear_coeffs(u_old, u_new, v_old, v_new, p, beta,
                                      c.self_coeff, c.cross_coeff);
  return c;
}

}  // namespace gnls

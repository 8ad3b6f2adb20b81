#include "gnls/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gnls/error.hpp"

namespace gnls {

void validate(const TridiagonalSystem& sys) {
  const std::size_t n = sys.main.size();
  if (n == 0 || sys.rhs.size() != n || sys.sub.size() != n - 1 ||
      sys.sup.size() != n - 1) {
    std::ostringstream msg;
    msg << "tridiagonal system sizes inconsistent: sub=" << sys.sub.size()
        << " main=" << n << " sup=" << sys.sup.size()
        << " rhs=" << sys.rhs.size();
    throw Error(Errc::length_mismatch, msg.str());
  }
}

namespace {

void check_pivot(cplx pivot, std::size_t row) {
  const double mag = std::abs(pivot);
  if (!(mag >= kPivotFloor) || !std::isfinite(mag)) {
    std::ostringstream msg;
    msg << "singular pivot at row " << row << " (|pivot| = " << mag << ")";
    throw Error(Errc::singular_pivot, msg.str());
  }
}

}  // namespace

void solve_into(std::span<const cplx> sub, std::span<const cplx> main,
                std::span<const cplx> sup, std::span<const cplx> rhs,
                std::span<cplx> x, std::span<cplx> scratch) {
  const std::size_t n = main.size();
  // scratch holds the modified superdiagonal, x the modified right-hand side
  check_pivot(main[0], 0);
  if (n > 1) scratch[0] = sup[0] / main[0];
  x[0] = rhs[0] / main[0];
  for (std::size_t i = 1; i < n; ++i) {
    const cplx pivot = main[i] - sub[i - 1] * scratch[i - 1];
    check_pivot(pivot, i);
    if (i + 1 < n) scratch[i] = sup[i] / pivot;
    x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= scratch[i] * x[i + 1];
}

std::vector<cplx> solve(const TridiagonalSystem& sys) {
  validate(sys);
  std::vector<cplx> x(sys.size());
  std::vector<cplx> scratch(sys.size());
  solve_into(sys.sub, sys.main, sys.sup, sys.rhs, x, scratch);
  return x;
}

double residual(std::span<const cplx> sub, std::span<const cplx> main,
                std::span<const cplx> sup, std::span<const cplx> rhs,
                std::span<const cplx> x) {
  const std::size_t n = main.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx row = main[i] * x[i];
    if (i > 0) row += sub[i - 1] * x[i - 1];
    if (i + 1 < n) row += sup[i] * x[i + 1];
    worst = std::max(worst, std::abs(row - rhs[i]));
  }
  return worst;
}

double residual(const TridiagonalSystem& sys, std::span<const cplx> x) {
  validate(sys);
  if (x.size() != sys.size())
    throw Error(Errc::length_mismatch,
                "residual: solution length " + std::to_string(x.size()) +
                    " != system size " + std::to_string(sys.size()));
  return residual(sys.sub, sys.main, sys.sup, sys.rhs, x);
}

}  // namespace gnls

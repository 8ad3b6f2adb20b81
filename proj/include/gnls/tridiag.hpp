#pragma once

// Complex tridiagonal systems and their direct (Thomas) solution.

#include <span>
#include <vector>

#include "gnls/types.hpp"

namespace gnls {

/// Row i reads sub[i-1] x[i-1] + main[i] x[i] + sup[i] x[i+1] = rhs[i].
struct TridiagonalSystem {
  std::vector<cplx> sub;   // n-1
  std::vector<cplx> main;  // n
  std::vector<cplx> sup;   // n-1
  std::vector<cplx> rhs;   // n

  explicit TridiagonalSystem(std::size_t n = 0)
      : sub(n ? n - 1 : 0), main(n), sup(n ? n - 1 : 0), rhs(n) {}

  std::size_t size() const noexcept { return main.size(); }
};

/// Pivots with magnitude below this are treated as singular.
inline constexpr double kPivotFloor = 1e-300;

/// Throws Errc::length_mismatch unless the four arrays agree on one n >= 1.
void validate(const TridiagonalSystem& sys);

/// Thomas elimination without pivoting. Throws Errc::singular_pivot when a
/// pivot falls below kPivotFloor (or is not finite).
std::vector<cplx> solve(const TridiagonalSystem& sys);

/// Same algorithm writing into caller-provided storage; scratch needs n
/// entries. No validation beyond the pivot check.
void solve_into(std::span<const cplx> sub, std::span<const cplx> main,
                std::span<const cplx> sup, std::span<const cplx> rhs,
                std::span<cplx> x, std::span<cplx> scratch);

/// max_j |(T x)_j - rhs_j|.
double residual(const TridiagonalSystem& sys, std::span<const cplx> x);

/// Residual on raw arrays, for callers that hold their own storage.
double residual(std::span<const cplx> sub, std::span<const cplx> main,
                std::span<const cplx> sup, std::span<const cplx> rhs,
                std::span<const cplx> x);

}  // namespace gnls

#include "gnls/grid.hpp"

#include <cmath>
#include <string>

#include "gnls/error.hpp"
#include "gnls/kernels.hpp"

namespace gnls {

Grid make_grid(double x0, double xf, std::size_t n_points) {
  if (!std::isfinite(x0) || !std::isfinite(xf) || !(xf > x0))
    throw Error(Errc::domain_degenerate,
                "grid: need x0 < xf, got x0=" + std::to_string(x0) +
                    " xf=" + std::to_string(xf));
  if (n_points < kMinGridPoints)
    throw Error(Errc::too_few_points,
                "grid: n_points must be >= " + std::to_string(kMinGridPoints) +
                    ", got " + std::to_string(n_points));
  return Grid{x0, xf, n_points, (xf - x0) / static_cast<double>(n_points - 1)};
}

std::vector<double> nodes(const Grid& grid) {
  std::vector<double> xs(grid.n_points);
  for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = grid.x(j);
  return xs;
}

void apply_boundary_zeros(Field& f) {
  const std::size_t n = f.size();
  if (n == 0) return;
  f[0] = 0.0;
  if (n >= 2) f[n - 2] = 0.0;
  f[n - 1] = 0.0;
}

bool satisfies_boundary_zeros(std::span<const cplx> f) noexcept {
  const std::size_t n = f.size();
  if (n < 3) return false;
  return f[0] == cplx{} && f[n - 2] == cplx{} && f[n - 1] == cplx{};
}

namespace {

void check_length(std::span<const cplx> f, const Grid& grid) {
  if (f.size() != grid.n_points)
    throw Error(Errc::length_mismatch,
                "field has " + std::to_string(f.size()) +
                    " values, grid has " + std::to_string(grid.n_points));
}

template <class Kernel>
Field apply(std::span<const cplx> f, const Grid& grid, Kernel kernel) {
  check_length(f, grid);
  Field out(f.size());
  kernel(f, grid.dx, out);
  return out;
}

}  // namespace

Field d_plus(std::span<const cplx> f, const Grid& grid) {
  return apply(f, grid, kernels::parallel::d_plus);
}

Field d_minus(std::span<const cplx> f, const Grid& grid) {
  return apply(f, grid, kernels::parallel::d_minus);
}

Field d_center(std::span<const cplx> f, const Grid& grid) {
  return apply(f, grid, kernels::parallel::d_center);
}

Field d_xx(std::span<const cplx> f, const Grid& grid) {
  return apply(f, grid, kernels::parallel::d_xx);
}

}  // namespace gnls

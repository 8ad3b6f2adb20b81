#pragma once

#include <cstddef>
#include <span>

#include "gnls/types.hpp"

namespace gnls {

/// Uniform mesh on [x0, xf]: node j sits at x0 + j*dx, j = 0 .. n_points-1.
struct Grid {
  double x0 = 0.0;
  double xf = 0.0;
  std::size_t n_points = 0;
  double dx = 0.0;

  double x(std::size_t j) const noexcept {
    return x0 + static_cast<double>(j) * dx;
  }
  std::size_t size() const noexcept { return n_points; }
};

inline constexpr std::size_t kMinGridPoints = 8;

/// Throws Errc::domain_degenerate if xf <= x0 and Errc::too_few_points if
/// n_points < kMinGridPoints.
Grid make_grid(double x0, double xf, std::size_t n_points);

/// Nodes of the grid as a real vector.
std::vector<double> nodes(const Grid& grid);

/// Zeroes the nodes 0, n-2 and n-1 that the scheme keeps pinned.
void apply_boundary_zeros(Field& f);
bool satisfies_boundary_zeros(std::span<const cplx> f) noexcept;

// Finite-difference operators. Values beyond either end of the array are
// taken as 0. Each returns a fresh field and throws Errc::length_mismatch if
// f does not have one value per grid node.

/// (f[j+1] - f[j]) / dx
Field d_plus(std::span<const cplx> f, const Grid& grid);
/// (f[j] - f[j-1]) / dx
Field d_minus(std::span<const cplx> f, const Grid& grid);
/// (f[j+1] - f[j-1]) / (2 dx)
Field d_center(std::span<const cplx> f, const Grid& grid);
/// d_plus(d_minus(f)), bit-for-bit.
Field d_xx(std::span<const cplx> f, const Grid& grid);

}  // namespace gnls

#pragma once

// Initial conditions sampled on a grid.
//
//   example1   u = 1.2 sqrt(2) e^{1.3 i x/4} sech(1.2 x + 10),
//              v = sqrt(2) e^{-1.3 i x/4} sech(x - 10)
//   menyuk     u = A1 sech(A1 (x - s1)) e^{i delta x/2},
//              v = A2 sech(A2 (x - s2)) e^{-i delta x/2}
//              (a two-pulse sech family covering the collision parameters
//              A1, A2, s1, s2, delta; outputs are labelled "menyuk-family")
//   sech_pair  f = amp sech((x - center)/width) e^{i k x}, per field
//   gaussian   f = amp exp(-((x - center)/width)^2) e^{i k x}, per field
//   zero       both fields 0
//   from_file  a snapshot written by write_snapshot

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnls/grid.hpp"
#include "gnls/types.hpp"

namespace gnls {

enum class InitialKind { example1, menyuk, sech_pair, gaussian, zero, from_file };

std::string_view to_string(InitialKind kind) noexcept;
/// Throws Errc::validation_error for an unknown name.
InitialKind parse_initial_kind(std::string_view name);

inline constexpr double kDefaultBoundaryTol = 1e-10;

struct InitialSpec {
  InitialKind kind = InitialKind::zero;
  std::map<std::string, double> params;
  std::string path;  // from_file only
  /// Largest boundary modulus accepted, relative to the peak modulus.
  double boundary_tol = kDefaultBoundaryTol;
};

struct ParameterInfo {
  std::string name;
  std::optional<double> default_value;  // nullopt: required
};

/// Named real parameters accepted by a kind.
const std::vector<ParameterInfo>& parameters_of(InitialKind kind);

/// Samples the profile on the grid, checks that it is negligible at the
/// boundary, then zeroes the pinned boundary nodes. The state has t = 0
/// except for from_file, which keeps the stored time.
///
/// Throws Errc::missing_parameter, Errc::unknown_key for a parameter the
/// kind does not take, Errc::domain_too_small when the boundary modulus
/// exceeds boundary_tol * peak, and the snapshot reader's errors.
FieldPair build(const InitialSpec& spec, const Grid& grid);

}  // namespace gnls

#pragma once

// Run configuration: a flat-section `key = value` text file.
//
//   # comment
//   [grid]      x0, xf, n_points
//   [scheme]    p, beta, dt, t_final, picard_tol, picard_max_iters
//   [initial]   kind, path, boundary_tol, and the kind's named parameters
//   [output]    diagnostics_path, summary_path, snapshot_dir, sample_every,
//               snapshot_every, j_norm_order
//   [fit]       t_min, targets (comma separated)
//
// Parsing is strict: unknown sections and keys are errors, and so are
// repeated keys.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gnls/grid.hpp"
#include "gnls/initcond.hpp"
#include "gnls/stepper.hpp"

namespace gnls {

struct OutputConfig {
  std::filesystem::path diagnostics_path;
  std::filesystem::path summary_path;  // default: <diagnostics_path>.summary.txt
  std::filesystem::path snapshot_dir;
  std::size_t sample_every = 1;
  std::size_t snapshot_every = 0;  // 0: no snapshots
  int j_norm_order = 0;            // 0: J-norm columns left empty
};

struct FitConfig {
  double t_min = 0.0;
  std::vector<std::string> targets;
};

struct RunConfig {
  Grid grid;
  SchemeParams scheme;
  InitialSpec initial;
  OutputConfig output;
  FitConfig fit;
  /// Dotted names of the keys that took their default value.
  std::vector<std::string> defaulted;
};

/// Columns fit_decay may be pointed at.
const std::vector<std::string>& fit_targets();

/// Throws Errc::parse_error (with line number), Errc::unknown_key,
/// Errc::missing_parameter or Errc::validation_error naming the key, and the
/// grid's Errc::domain_degenerate / Errc::too_few_points.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; Errc::io_failure if it cannot be read.
RunConfig load_config(const std::filesystem::path& path);

/// Effective settings, one `section.key = value` per line, defaults marked.
std::string describe(const RunConfig& config);

}  // namespace gnls

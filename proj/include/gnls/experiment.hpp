#pragma once

// End-to-end runs: config -> initial state -> evolve -> diagnostics CSV,
// snapshots and a run summary; plus decay fits over a finished CSV.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gnls/config.hpp"
#include "gnls/diagnostics.hpp"

namespace gnls {

/// Header of the diagnostics CSV.
inline constexpr std::string_view kDiagnosticsHeader =
    "t,mass_u,mass_v,energy,linf_u,linf_v,l2p2_u,l2p2_v,j_norm_u,j_norm_v,"
    "picard_iters";

/// One CSV row (no trailing newline). Empty J fields when absent.
std::string format_record(const DiagnosticsRecord& rec);

/// Parses a diagnostics CSV back into records. Throws Errc::io_failure,
/// Errc::malformed_file, or Errc::missing_column for a wrong header.
std::vector<DiagnosticsRecord> read_diagnostics(const std::filesystem::path& path);

struct TargetFit {
  std::string target;
  std::optional<DecayFit> fit;
  std::string error;  // set when the fit could not be computed
};

struct RunSummary {
  std::size_t steps = 0;
  std::size_t records = 0;
  int max_picard_iters = 0;
  double max_linear_residual = 0.0;
  double mass_u_drift = 0.0;  // max_t |m(t) - m(0)| / |m(0)|
  double mass_v_drift = 0.0;
  double energy_drift = 0.0;
  std::vector<TargetFit> fits;
};

/// Renders the summary file contents (deterministic: no timings).
std::string format_summary(const RunConfig& config, const RunSummary& summary);

/// Runs one experiment, writing every output the config names. Echoes the
/// effective configuration to `log`. Holds an advisory lock on
/// <diagnostics_path>.lock for the duration; a concurrent run on the same
/// path fails with Errc::io_failure. Throws on any failure after flushing
/// the rows written so far.
RunSummary run(const RunConfig& config, std::ostream& log);

/// run() with errors mapped to exit codes (0 ok, 2 config, 3 numerical,
/// 4 I/O). Failures print one machine-readable line to `err`:
///   error category=<c> code=<code> exit=<n> message="<text>"
int run_experiment(const RunConfig& config, std::ostream& log, std::ostream& err);

/// Prints the machine-readable error line for e.
void report_error(const std::exception& e, std::ostream& err);

/// Column values of one fit target, as (t, value) samples.
std::vector<Sample> column_samples(const std::vector<DiagnosticsRecord>& records,
                                   const std::string& target);

/// Fits every target over t > t_min. Returns one line per target,
///   <target> <slope> <intercept> <r2> <t_first> <t_last>
/// after a `#` header line. When plot_dir is given, writes
/// <plot_dir>/<csv stem>.<target>.dat with two columns `t value`.
std::string fit_report(const std::filesystem::path& csv_path, double t_min,
                       const std::vector<std::string>& targets,
                       const std::optional<std::filesystem::path>& plot_dir);

}  // namespace gnls

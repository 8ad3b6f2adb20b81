#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnls {

enum class Errc {
  // grid / argument errors
  domain_degenerate,
  too_few_points,
  length_mismatch,
  invalid_argument,
  // numerical failures
  singular_pivot,
  picard_diverged,
  // configuration
  parse_error,
  validation_error,
  unknown_key,
  missing_parameter,
  domain_too_small,
  // fitting
  insufficient_samples,
  nonpositive_value,
  // files
  io_failure,
  malformed_file,
  missing_column,
};

/// Coarse grouping used for CLI exit codes.
enum class ErrorCategory { usage, config, numerical, io };

ErrorCategory category_of(Errc code) noexcept;
std::string_view to_string(Errc code) noexcept;
std::string_view to_string(ErrorCategory category) noexcept;

/// Exit status the CLI returns for an error category
/// (0 success, 2 config, 3 numerical, 4 I/O, 1 anything else).
int exit_code(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  Errc code_;
};

}  // namespace gnls

#include "gnls/error.hpp"

namespace gnls {

ErrorCategory category_of(Errc code) noexcept {
  switch (code) {
    case Errc::singular_pivot:
    case Errc::picard_diverged:
      return ErrorCategory::numerical;
    case Errc::domain_degenerate:
    case Errc::too_few_points:
    case Errc::parse_error:
    case Errc::validation_error:
    case Errc::unknown_key:
    case Errc::missing_parameter:
    case Errc::domain_too_small:
      return ErrorCategory::config;
    case Errc::io_failure:
    case Errc::malformed_file:
    case Errc::missing_column:
      return ErrorCategory::io;
    case Errc::length_mismatch:
    case Errc::invalid_argument:
    case Errc::insufficient_samples:
    case Errc::nonpositive_value:
      return ErrorCategory::usage;
  }
  return ErrorCategory::usage;
}

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain_degenerate: return "domain-degenerate";
    case Errc::too_few_points: return "too-few-points";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::singular_pivot: return "singular-pivot";
    case Errc::picard_diverged: return "picard-diverged";
    case Errc::parse_error: return "parse-error";
    case Errc::validation_error: return "validation-error";
    case Errc::unknown_key: return "unknown-key";
    case Errc::missing_parameter: return "missing-parameter";
    case Errc::domain_too_small: return "domain-too-small";
    case Errc::insufficient_samples: return "insufficient-samples";
    case Errc::nonpositive_value: return "nonpositive-value";
    case Errc::io_failure: return "io-failure";
    case Errc::malformed_file: return "malformed-file";
    case Errc::missing_column: return "missing-column";
  }
  return "unknown";
}

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::usage: return "usage";
    case ErrorCategory::config: return "config";
    case ErrorCategory::numerical: return "numerical";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::config: return 2;
    case ErrorCategory::numerical: return 3;
    case ErrorCategory::io: return 4;
    case ErrorCategory::usage: return 1;
  }
  return 1;
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

}  // namespace gnls

#pragma once

// Round-trip-safe number formatting shared by every text output.

#include <string>
#include <string_view>
#include <vector>

namespace gnls::csv {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_real(double value);

/// Exact inverse of format_real. Throws Errc::malformed_file.
double parse_real(std::string_view text);

/// Splits one line on commas; no quoting (none of our fields need it).
std::vector<std::string_view> split(std::string_view line, char sep = ',');

/// Strips surrounding blanks and a trailing '\r'.
std::string_view trim(std::string_view text);

}  // namespace gnls::csv

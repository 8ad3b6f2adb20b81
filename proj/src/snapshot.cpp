#include "gnls/snapshot.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gnls/csv.hpp"
#include "gnls/error.hpp"

namespace gnls {

namespace {

constexpr std::string_view kColumns = "x,re_u,im_u,re_v,im_v";

[[noreturn]] void malformed(const std::filesystem::path& path, std::size_t line,
                            const std::string& what) {
  throw Error(Errc::malformed_file, path.string() + ":" + std::to_string(line) +
                                        ": " + what);
}

}  // namespace

void write_snapshot(const FieldPair& pair, const Grid& grid,
                    const std::filesystem::path& path) {
  if (pair.u.size() != grid.n_points || pair.v.size() != grid.n_points)
    throw Error(Errc::length_mismatch, "snapshot: fields do not match the grid");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_failure, "cannot open " + path.string());

  using csv::format_real;
  out << "# t=" << format_real(pair.t) << " x0=" << format_real(grid.x0)
      << " dx=" << format_real(grid.dx) << " n=" << grid.n_points << '\n'
      << kColumns << '\n';
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    out << format_real(grid.x(j)) << ',' << format_real(pair.u[j].real()) << ','
        << format_real(pair.u[j].imag()) << ',' << format_real(pair.v[j].real())
        << ',' << format_real(pair.v[j].imag()) << '\n';
  }
  out.flush();
  if (!out) throw Error(Errc::io_failure, "write failed: " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_failure, "cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) malformed(path, 1, "empty file");
  std::string_view meta = csv::trim(line);
  if (!meta.starts_with('#')) malformed(path, 1, "missing metadata line");
  meta.remove_prefix(1);

  std::map<std::string, std::string, std::less<>> fields;
  std::istringstream tokens{std::string(meta)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) malformed(path, 1, "bad metadata '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"t", "x0", "dx", "n"})
    if (!fields.contains(key))
      malformed(path, 1, std::string("metadata lacks ") + key);

  Snapshot snap;
  std::size_t n = 0;
  try {
    snap.pair.t = csv::parse_real(fields["t"]);
    snap.x0 = csv::parse_real(fields["x0"]);
    snap.dx = csv::parse_real(fields["dx"]);
    n = std::stoul(fields["n"]);
  } catch (const std::exception& e) {
    malformed(path, 1, e.what());
  }
  snap.n = n;

  if (!std::getline(in, line) || csv::trim(line) != kColumns)
    malformed(path, 2, "expected column header " + std::string(kColumns));

  snap.pair.u.reserve(n);
  snap.pair.v.reserve(n);
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv::trim(line).empty()) continue;
    const auto cols = csv::split(line);
    if (cols.size() != 5) malformed(path, line_no, "expected 5 columns");
    try {
      snap.pair.u.emplace_back(csv::parse_real(cols[1]), csv::parse_real(cols[2]));
      snap.pair.v.emplace_back(csv::parse_real(cols[3]), csv::parse_real(cols[4]));
    } catch (const Error& e) {
      malformed(path, line_no, e.what());
    }
  }
  if (snap.pair.u.size() != n)
    malformed(path, line_no,
              "expected " + std::to_string(n) + " rows, found " +
                  std::to_string(snap.pair.u.size()));
  return snap;
}

}  // namespace gnls

#pragma once

// Field snapshots: a metadata line
//   # t=<t> x0=<x0> dx=<dx> n=<n>
// a column header, then one row per node with columns x,re_u,im_u,re_v,im_v.
// Numbers use shortest round-trip formatting, so reading a snapshot back
// reproduces the written values bit for bit.

#include <cstddef>
#include <filesystem>

#include "gnls/grid.hpp"
#include "gnls/types.hpp"

namespace gnls {

struct Snapshot {
  FieldPair pair;
  double x0 = 0.0;
  double dx = 0.0;
  std::size_t n = 0;
};

/// Throws Errc::length_mismatch if the fields do not match the grid and
/// Errc::io_failure if the file cannot be written.
void write_snapshot(const FieldPair& pair, const Grid& grid,
                    const std::filesystem::path& path);

/// Throws Errc::io_failure if the file cannot be opened and
/// Errc::malformed_file on any format violation.
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace gnls

#pragma once

#include <complex>
#include <vector>

namespace gnls {

using cplx = std::complex<double>;

/// Complex samples of one wave envelope, one value per grid node.
using Field = std::vector<cplx>;

/// x^k for a small non-negative integer k by repeated squaring.
constexpr double ipow(double x, int k) noexcept {
  double result = 1.0;
  while (k > 0) {
    if (k & 1) result *= x;
    x *= x;
    k >>= 1;
  }
  return result;
}

/// The two coupled envelopes at one time level.
struct FieldPair {
  Field u;
  Field v;
  double t = 0.0;

  bool operator==(const FieldPair&) const = default;
};

}  // namespace gnls

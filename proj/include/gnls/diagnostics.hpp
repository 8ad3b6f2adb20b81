#pragma once

// Discrete norms, conserved quantities, the J = (x + 2it d/dx) diagnostic and
// log-log decay fits.
//
// All sums run over every node with weight dx. Scheme states vanish at the
// pinned boundary nodes, so this agrees with sums over the interior.

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "gnls/grid.hpp"
#include "gnls/types.hpp"

namespace gnls {

struct DiagnosticsRecord {
  double t = 0.0;
  double mass_u = 0.0;  // dx sum |u_j|^2
  double mass_v = 0.0;
  double energy = 0.0;
  double linf_u = 0.0;
  double linf_v = 0.0;
  double l2p2_u = 0.0;  // L^(2p+2) norm
  double l2p2_v = 0.0;
  std::optional<double> j_norm_u;
  std::optional<double> j_norm_v;
  int picard_iters = 0;
};

/// dx * sum |f_j|^2.
double mass(std::span<const cplx> f, double dx);

/// (dx * sum |f_j|^q)^(1/q); throws Errc::invalid_argument for q < 1.
double lp_norm(std::span<const cplx> f, double dx, double q);

/// max_j |f_j|; throws Errc::invalid_argument for an empty field.
double linf_norm(std::span<const cplx> f);

/// E = |D+ u|_2^2 + |D+ v|_2^2 + (|u|_{2p+2}^{2p+2} + |v|_{2p+2}^{2p+2})/(p+1)
///     + 2 beta/(p+1) dx sum |u_j|^(p+1) |v_j|^(p+1)
double energy(const FieldPair& pair, const Grid& grid, int p, double beta);

/// Highest J power supported; repeated centered differences lose accuracy
/// quickly beyond it.
inline constexpr int kMaxJOrder = 3;

/// L2 norm of J^m f with J f = x f + 2 i t D_x f (centered D_x).
/// Throws Errc::invalid_argument for t == 0 or m outside [1, kMaxJOrder].
double j_norm(std::span<const cplx> f, const Grid& grid, double t, int m);

/// The t -> 0 limit of j_norm: the L2 norm of x^m f.
double j_norm_initial(std::span<const cplx> f, const Grid& grid, int m);

/// Full record for one state. j_order == 0 leaves the J columns empty.
DiagnosticsRecord make_record(const FieldPair& pair, const Grid& grid, int p,
                              double beta, int j_order, int picard_iters);

struct Sample {
  double t;
  double value;
};

/// Least-squares line through (log t, log value).
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_min = 0.0;  // window actually used: first and last sample time
  double t_max = 0.0;
  std::size_t n_samples = 0;
};

inline constexpr std::size_t kMinFitSamples = 5;

/// Fits samples with t_min < t <= t_max. Throws Errc::insufficient_samples
/// with fewer than kMinFitSamples in the window and Errc::nonpositive_value
/// if any value in the window is <= 0.
DecayFit fit_decay(std::span<const Sample> samples, double t_min,
                   double t_max = std::numeric_limits<double>::infinity());

}  // namespace gnls

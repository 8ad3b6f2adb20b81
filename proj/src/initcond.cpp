#include "gnls/initcond.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "gnls/error.hpp"
#include "gnls/snapshot.hpp"

namespace gnls {

std::string_view to_string(InitialKind kind) noexcept {
  switch (kind) {
    case InitialKind::example1: return "example1";
    case InitialKind::menyuk: return "menyuk";
    case InitialKind::sech_pair: return "sech_pair";
    case InitialKind::gaussian: return "gaussian";
    case InitialKind::zero: return "zero";
    case InitialKind::from_file: return "from_file";
  }
  return "unknown";
}

InitialKind parse_initial_kind(std::string_view name) {
  for (auto kind : {InitialKind::example1, InitialKind::menyuk,
                    InitialKind::sech_pair, InitialKind::gaussian,
                    InitialKind::zero, InitialKind::from_file})
    if (to_string(kind) == name) return kind;
  throw Error(Errc::validation_error,
              "initial.kind: unknown kind '" + std::string(name) + "'");
}

const std::vector<ParameterInfo>& parameters_of(InitialKind kind) {
  static const std::vector<ParameterInfo> none;
  static const std::vector<ParameterInfo> menyuk = {
      {"A1", std::nullopt}, {"A2", std::nullopt}, {"s1", std::nullopt},
      {"s2", std::nullopt}, {"delta", 0.0}};
  static const std::vector<ParameterInfo> pulses = {
      {"amp_u", std::nullopt}, {"center_u", std::nullopt},
      {"width_u", 1.0},        {"k_u", 0.0},
      {"amp_v", std::nullopt}, {"center_v", std::nullopt},
      {"width_v", 1.0},        {"k_v", 0.0}};
  switch (kind) {
    case InitialKind::menyuk: return menyuk;
    case InitialKind::sech_pair:
    case InitialKind::gaussian: return pulses;
    default: return none;
  }
}

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

// Resolves every declared parameter, applying defaults.
std::map<std::string, double> resolve(const InitialSpec& spec) {
  const auto& infos = parameters_of(spec.kind);
  for (const auto& [name, value] : spec.params) {
    const bool known = std::any_of(infos.begin(), infos.end(),
                                   [&](const auto& p) { return p.name == name; });
    if (!known)
      throw Error(Errc::unknown_key, "initial." + name + ": not a parameter of " +
                                         std::string(to_string(spec.kind)));
  }
  std::map<std::string, double> out;
  for (const auto& info : infos) {
    if (auto it = spec.params.find(info.name); it != spec.params.end()) {
      out[info.name] = it->second;
    } else if (info.default_value) {
      out[info.name] = *info.default_value;
    } else {
      throw Error(Errc::missing_parameter,
                  "initial." + info.name + " is required for kind " +
                      std::string(to_string(spec.kind)));
    }
  }
  return out;
}

using Profile = std::function<cplx(double)>;

FieldPair sample(const Grid& grid, const Profile& u, const Profile& v) {
  FieldPair pair{Field(grid.n_points), Field(grid.n_points), 0.0};
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    const double x = grid.x(j);
    pair.u[j] = u(x);
    pair.v[j] = v(x);
  }
  return pair;
}

Profile pulse(InitialKind kind, double amp, double center, double width,
              double k) {
  if (kind == InitialKind::gaussian) {
    return [=](double x) {
      const double s = (x - center) / width;
      return amp * std::exp(-s * s) * std::polar(1.0, k * x);
    };
  }
  return [=](double x) {
    return amp * sech((x - center) / width) * std::polar(1.0, k * x);
  };
}

FieldPair from_file(const InitialSpec& spec, const Grid& grid) {
  Snapshot snap = read_snapshot(spec.path);
  const double scale = std::max(std::abs(grid.x0), std::abs(grid.xf));
  if (snap.n != grid.n_points || std::abs(snap.x0 - grid.x0) > 1e-12 * scale ||
      std::abs(snap.dx - grid.dx) > 1e-12 * grid.dx) {
    std::ostringstream msg;
    msg << "initial.path: snapshot grid (x0=" << snap.x0 << ", dx=" << snap.dx
        << ", n=" << snap.n << ") does not match the configured grid";
    throw Error(Errc::validation_error, msg.str());
  }
  return std::move(snap.pair);
}

void check_boundary(const FieldPair& pair, double tol) {
  const std::size_t n = pair.u.size();
  double peak = 0.0;
  double edge = 0.0;
  for (const Field* f : {&pair.u, &pair.v}) {
    for (const cplx z : *f) peak = std::max(peak, std::abs(z));
    for (std::size_t j : {std::size_t{0}, n - 2, n - 1})
      edge = std::max(edge, std::abs((*f)[j]));
  }
  if (edge > tol * peak) {
    std::ostringstream msg;
    msg << "initial profile is not negligible at the boundary (|f| = " << edge
        << " vs peak " << peak << ", tolerance " << tol
        << " relative); enlarge the domain";
    throw Error(Errc::domain_too_small, msg.str());
  }
}

}  // namespace

FieldPair build(const InitialSpec& spec, const Grid& grid) {
  FieldPair pair;
  switch (spec.kind) {
    case InitialKind::zero:
      resolve(spec);
      pair = FieldPair{Field(grid.n_points), Field(grid.n_points), 0.0};
      break;
    case InitialKind::example1: {
      resolve(spec);
      const double root2 = std::sqrt(2.0);
      pair = sample(
          grid,
          [=](double x) {
            return 1.2 * root2 * sech(1.2 * x + 10.0) * std::polar(1.0, 1.3 * x / 4.0);
          },
          [=](double x) {
            return root2 * sech(x - 10.0) * std::polar(1.0, -1.3 * x / 4.0);
          });
      break;
    }
    case InitialKind::menyuk: {
      auto prm = resolve(spec);
      const double a1 = prm["A1"], a2 = prm["A2"], s1 = prm["s1"], s2 = prm["s2"];
      const double delta = prm["delta"];
      pair = sample(
          grid,
          [=](double x) {
            return a1 * sech(a1 * (x - s1)) * std::polar(1.0, delta * x / 2.0);
          },
          [=](double x) {
            return a2 * sech(a2 * (x - s2)) * std::polar(1.0, -delta * x / 2.0);
          });
      break;
    }
    case InitialKind::sech_pair:
    case InitialKind::gaussian: {
      auto prm = resolve(spec);
      for (const char* w : {"width_u", "width_v"})
        if (!(prm[w] > 0.0))
          throw Error(Errc::validation_error,
                      std::string("initial.") + w + " must be positive");
      pair = sample(grid,
                    pulse(spec.kind, prm["amp_u"], prm["center_u"],
                          prm["width_u"], prm["k_u"]),
                    pulse(spec.kind, prm["amp_v"], prm["center_v"],
                          prm["width_v"], prm["k_v"]));
      break;
    }
    case InitialKind::from_file:
      resolve(spec);
      if (spec.path.empty())
        throw Error(Errc::missing_parameter,
                    "initial.path is required for kind from_file");
      pair = from_file(spec, grid);
      break;
  }
  check_boundary(pair, spec.boundary_tol);
  apply_boundary_zeros(pair.u);
  apply_boundary_zeros(pair.v);
  return pair;
}

}  // namespace gnls

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>

#include "gnls/error.hpp"
#include "gnls/initcond.hpp"
#include "gnls/snapshot.hpp"

using namespace gnls;

namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::invalid_argument;
}

std::size_t argmax(const Field& f) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < f.size(); ++j)
    if (std::abs(f[j]) > std::abs(f[best])) best = j;
  return best;
}

}  // namespace

TEST_CASE("kind names") {
  for (auto k : {InitialKind::example1, InitialKind::menyuk, InitialKind::sech_pair,
                 InitialKind::gaussian, InitialKind::zero, InitialKind::from_file})
    CHECK(parse_initial_kind(to_string(k)) == k);
  CHECK(error_of([] { parse_initial_kind("soliton"); }) == Errc::validation_error);
}

TEST_CASE("zero") {
  const Grid g = make_grid(-5, 5, 11);
  const FieldPair s = build(InitialSpec{}, g);
  CHECK(s.u == Field(11));
  CHECK(s.v == Field(11));
  CHECK(s.t == 0.0);
}

TEST_CASE("example1 profile") {
  const Grid g = make_grid(-100, 100, 8193);
  InitialSpec spec;
  spec.kind = InitialKind::example1;
  const FieldPair s = build(spec, g);
  CHECK(g.x(argmax(s.u)) == doctest::Approx(-10.0 / 1.2).epsilon(0.005));
  CHECK(g.x(argmax(s.v)) == doctest::Approx(10.0).epsilon(0.005));
  // value and phase at a node
  const std::size_t j = 4000;
  const double x = g.x(j);
  const cplx want = 1.2 * std::numbers::sqrt2 * std::polar(1.0, 1.3 * x / 4.0) /
                    std::cosh(1.2 * x + 10.0);
  CHECK(std::abs(s.u[j] - want) <= 1e-15);
  CHECK(s.u[0] == cplx{});
  CHECK(s.u[8191] == cplx{});
  CHECK(s.v[8192] == cplx{});
  CHECK(error_of([&] {
          auto bad = spec;
          bad.params["A1"] = 1.0;
          build(bad, g);
        }) == Errc::unknown_key);
}

TEST_CASE("menyuk family") {
  const Grid g = make_grid(-100, 100, 8193);
  InitialSpec spec;
  spec.kind = InitialKind::menyuk;
  spec.params = {{"A1", 0.25}, {"A2", 0.5}, {"s1", 8.0}, {"s2", -5.0}};
  spec.boundary_tol = 1e-9;
  const FieldPair s = build(spec, g);
  CHECK(std::abs(s.u[argmax(s.u)]) == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(std::abs(s.v[argmax(s.v)]) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(g.x(argmax(s.u)) == doctest::Approx(8.0).epsilon(1e-3));
  CHECK(g.x(argmax(s.v)) == doctest::Approx(-5.0).epsilon(1e-3));

  SUBCASE("default boundary guard rejects the wide pulse") {
    spec.boundary_tol = kDefaultBoundaryTol;
    CHECK(error_of([&] { build(spec, g); }) == Errc::domain_too_small);
  }
  SUBCASE("missing parameter") {
    spec.params.erase("s2");
    CHECK(error_of([&] { build(spec, g); }) == Errc::missing_parameter);
  }
  SUBCASE("delta adds opposite phase tilts") {
    spec.params["delta"] = 0.6;
    const FieldPair t = build(spec, g);
    const std::size_t j = 4200;
    CHECK(std::arg(t.u[j]) == doctest::Approx(std::remainder(0.3 * g.x(j), 2 * std::numbers::pi)));
    CHECK(std::arg(t.v[j]) == doctest::Approx(std::remainder(-0.3 * g.x(j), 2 * std::numbers::pi)));
  }
}

TEST_CASE("gaussian and sech pairs") {
  const Grid g = make_grid(-80, 80, 1601);
  InitialSpec spec;
  spec.kind = InitialKind::gaussian;
  spec.params = {{"amp_u", 2.0}, {"center_u", -3.0}, {"amp_v", 1.0}, {"center_v", 4.0}};
  const FieldPair s = build(spec, g);
  CHECK(std::abs(s.u[argmax(s.u)]) == doctest::Approx(2.0));
  CHECK(g.x(argmax(s.v)) == doctest::Approx(4.0));
  spec.kind = InitialKind::sech_pair;
  spec.params["width_v"] = 2.0;
  const FieldPair t = build(spec, g);
  const std::size_t j = 840;  // x = 4.0
  CHECK(std::abs(t.v[j]) == doctest::Approx(1.0));
  CHECK(std::abs(t.v[j + 10]) == doctest::Approx(1.0 / std::cosh(0.5)));

  SUBCASE("too narrow a domain") {
    const Grid small = make_grid(-6, 6, 121);
    CHECK(error_of([&] { build(spec, small); }) == Errc::domain_too_small);
  }
}

TEST_CASE("from_file round trip") {
  const char* tmp = std::getenv("GNLS_TEST_TMP");
  const std::filesystem::path dir =
      std::filesystem::path(tmp ? tmp : std::filesystem::temp_directory_path().string()) /
      "initcond";
  std::filesystem::create_directories(dir);
  const Grid g = make_grid(-60, 60, 601);
  InitialSpec spec;
  spec.kind = InitialKind::example1;
  FieldPair s = build(spec, g);
  s.t = 3.25;
  write_snapshot(s, g, dir / "state.csv");

  InitialSpec from;
  from.kind = InitialKind::from_file;
  from.path = (dir / "state.csv").string();
  const FieldPair back = build(from, g);
  CHECK(back == s);

  CHECK_THROWS_AS(build(from, make_grid(-60, 60, 603)), Error);
  from.path = (dir / "missing.csv").string();
  CHECK(error_of([&] { build(from, g); }) == Errc::io_failure);
}

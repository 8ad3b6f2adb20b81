#include <doctest.h>

#include <limits>
#include <random>

#include "gnls/error.hpp"
#include "gnls/tridiag.hpp"
#include "test_support.hpp"

using namespace gnls;

namespace {

double inf_norm(const TridiagonalSystem& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double row = std::abs(s.main[i]);
    if (i > 0) row += std::abs(s.sub[i - 1]);
    if (i + 1 < s.size()) row += std::abs(s.sup[i]);
    worst = std::max(worst, row);
  }
  return worst;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (auto z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

TEST_CASE("identity system returns the right-hand side") {
  std::mt19937_64 rng(1);
  TridiagonalSystem sys(17);
  std::fill(sys.main.begin(), sys.main.end(), cplx{1.0, 0.0});
  for (auto& r : sys.rhs) r = test::random_cplx(rng);
  const auto x = solve(sys);
  CHECK(x == sys.rhs);
  CHECK(residual(sys, x) == 0.0);
}

TEST_CASE("2x2 by hand") {
  TridiagonalSystem sys(2);
  sys.main = {2.0, 2.0};
  sys.sub = {1.0};
  sys.sup = {1.0};
  sys.rhs = {3.0, 3.0};
  const auto x = solve(sys);
  CHECK(std::abs(x[0] - 1.0) < 1e-15);
  CHECK(std::abs(x[1] - 1.0) < 1e-15);
}

TEST_CASE("n = 1") {
  TridiagonalSystem sys(1);
  sys.main = {cplx{0, 2}};
  sys.rhs = {cplx{4, 0}};
  CHECK(solve(sys)[0] == cplx{0, -2});
}

TEST_CASE("matches the dense elimination oracle") {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto sys = test::random_dominant_system(rng, 64);
    const auto x = solve(sys);
    const auto ref = test::dense_solve(test::to_dense(sys), sys.rhs);
    worst = std::max(worst, test::max_abs_diff(x, ref));
  }
  CHECK(worst <= 1e-10);
  for (std::size_t n = 2; n <= 128; n += 9) {
    const auto sys = test::random_dominant_system(rng, n);
    CHECK(test::max_abs_diff(solve(sys),
                             test::dense_solve(test::to_dense(sys), sys.rhs)) <= 1e-10);
  }
}

TEST_CASE("residual bound on random systems") {
  std::mt19937_64 rng(99);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 511;
    const auto sys = test::random_dominant_system(rng, n);
    const auto x = solve(sys);
    const double bound = 100 * eps * (inf_norm(sys) * max_abs(x) + max_abs(sys.rhs));
    REQUIRE(residual(sys, x) <= bound);
  }
}

TEST_CASE("linear in the right-hand side") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto sys = test::random_dominant_system(rng, 100);
    const auto x = solve(sys);
    const cplx c = test::random_cplx(rng, 10.0);
    for (auto& r : sys.rhs) r *= c;
    const auto y = solve(sys);
    for (std::size_t i = 0; i < x.size(); ++i)
      CHECK(std::abs(y[i] - c * x[i]) <= 1e-13 * std::abs(c * x[i]) + 1e-300);
  }
}

TEST_CASE("residual") {
  std::mt19937_64 rng(8);
  auto sys = test::random_dominant_system(rng, 30);
  SUBCASE("zero guess gives the rhs norm") {
    CHECK(residual(sys, std::vector<cplx>(30)) == max_abs(sys.rhs));
  }
  SUBCASE("perturbing one entry") {
    const auto x = solve(sys);
    const double base = residual(sys, x);
    const std::size_t k = 13;
    const cplx delta{1e-3, -2e-3};
    auto y = x;
    y[k] += delta;
    // column k of T times delta, evaluated directly
    const double expected = std::max({std::abs(sys.sub[k - 1] * delta),
                                      std::abs(sys.main[k] * delta),
                                      std::abs(sys.sup[k] * delta)});
    CHECK(residual(sys, y) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(base < 1e-12);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(residual(sys, std::vector<cplx>(29)), Error);
  }
}

TEST_CASE("singular pivot is an error, not NaN") {
  TridiagonalSystem sys(3);
  sys.main = {1.0, 1.0, 1.0};
  sys.sub = {1.0, 0.0};
  sys.sup = {1.0, 0.0};  // second pivot: 1 - 1*1 = 0
  sys.rhs = {1.0, 1.0, 1.0};
  try {
    solve(sys);
    FAIL("expected singular-pivot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular_pivot);
    CHECK(e.category() == ErrorCategory::numerical);
  }
}

TEST_CASE("inconsistent sizes") {
  TridiagonalSystem sys(4);
  sys.sup.pop_back();
  try {
    solve(sys);
    FAIL("expected length-mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::length_mismatch);
  }
  CHECK_THROWS_AS(solve(TridiagonalSystem(0)), Error);
}

// The parallel kernels against the serial reference loops.

#include <doctest.h>

#include <random>

#ifdef GNLS_HAVE_OPENMP
#include <omp.h>
#endif

#include "gnls/kernels.hpp"
#include "test_support.hpp"

using namespace gnls;
namespace ks = gnls::kernels::serial;
namespace kp = gnls::kernels::parallel;

namespace {

template <class Kernel>
void check_stencil_bitwise(Kernel serial, Kernel parallel, std::size_t n) {
  std::mt19937_64 rng(n);
  const Field f = test::random_field(rng, n);
  Field a(n), b(n);
  serial(f, 0.037, a);
  parallel(f, 0.037, b);
  CHECK(a == b);
}

}  // namespace

TEST_CASE("stencil kernels are bit-identical to the serial reference") {
  for (std::size_t n : {8u, 100u, 5000u, 20001u}) {
    check_stencil_bitwise(ks::d_plus, kp::d_plus, n);
    check_stencil_bitwise(ks::d_minus, kp::d_minus, n);
    check_stencil_bitwise(ks::d_center, kp::d_center, n);
    check_stencil_bitwise(ks::d_xx, kp::d_xx, n);
  }
}

TEST_CASE("coefficient and system assembly match the serial reference") {
  std::mt19937_64 rng(7);
  const std::size_t n = 9000;
  const Field uo = test::random_field(rng, n), un = test::random_field(rng, n);
  const Field vo = test::random_field(rng, n), vn = test::random_field(rng, n);
  for (int p : {1, 3, 5, 7}) {
    std::vector<double> s1(n), c1(n), s2(n), c2(n);
    ks::nonlinear_coeffs(uo, un, vo, vn, p, 0.7, s1, c1);
    kp::nonlinear_coeffs(uo, un, vo, vn, p, 0.7, s2, c2);
    CHECK(s1 == s2);
    CHECK(c1 == c2);

    TridiagonalSystem a(n), b(n);
    ks::midpoint_system(uo, s1, c1, 0.05, 0.02, {a.sub, a.main, a.sup, a.rhs});
    kp::midpoint_system(uo, s1, c1, 0.05, 0.02, {b.sub, b.main, b.sup, b.rhs});
    CHECK(a.sub == b.sub);
    CHECK(a.main == b.main);
    CHECK(a.sup == b.sup);
    CHECK(a.rhs == b.rhs);
  }

  Field j1(n), j2(n);
  ks::j_apply(uo, -3.0, 0.01, 1.5, j1);
  kp::j_apply(uo, -3.0, 0.01, 1.5, j2);
  CHECK(j1 == j2);
}

TEST_CASE("reductions agree with the serial sums") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2047u, 2048u, 2049u, 50000u}) {
    const Field u = test::random_field(rng, n);
    const Field v = test::random_field(rng, n);
    for (double q : {1.0, 2.0, 3.5, 8.0}) {
      const double s = ks::sum_abs_pow(u, q);
      CHECK(kp::sum_abs_pow(u, q) == doctest::Approx(s).epsilon(1e-13));
    }
    CHECK(kp::coupling_sum(u, v, 3) ==
          doctest::Approx(ks::coupling_sum(u, v, 3)).epsilon(1e-13));
    CHECK(kp::max_abs(u) == ks::max_abs(u));
    CHECK(kp::max_abs_diff(u, v) == ks::max_abs_diff(u, v));
  }
}

TEST_CASE("max reductions propagate NaN") {
  Field f(5000, cplx{1.0, 0.0});
  f[4321] = cplx{std::nan(""), 0.0};
  CHECK(std::isnan(ks::max_abs(f)));
  CHECK(std::isnan(kp::max_abs(f)));
  const Field g(5000);
  CHECK(std::isnan(kp::max_abs_diff(f, g)));
}

#ifdef GNLS_HAVE_OPENMP
TEST_CASE("parallel sums do not depend on the thread count") {
  std::mt19937_64 rng(3);
  const Field u = test::random_field(rng, 100003);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double one = kp::sum_abs_pow(u, 2.0);
  omp_set_num_threads(3);
  const double three = kp::sum_abs_pow(u, 2.0);
  omp_set_num_threads(7);
  const double seven = kp::sum_abs_pow(u, 2.0);
  omp_set_num_threads(saved);
  CHECK(one == three);
  CHECK(one == seven);
}
#endif

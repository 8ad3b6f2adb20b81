// Serial reference kernels against the OpenMP kernels, plus one full step.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "gnls/initcond.hpp"
#include "gnls/kernels.hpp"
#include "gnls/stepper.hpp"

using namespace gnls;

namespace {

Field random_field(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Field f(n);
  for (auto& z : f) z = {d(rng), d(rng)};
  return f;
}

template <bool Parallel>
void BM_d_xx(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f = random_field(n, 1);
  Field out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::d_xx(f, 0.01, out);
    else
      kernels::serial::d_xx(f, 0.01, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_nonlinear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field uo = random_field(n, 1), un = random_field(n, 2);
  const Field vo = random_field(n, 3), vn = random_field(n, 4);
  std::vector<double> ws(n), wc(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::nonlinear_coeffs(uo, un, vo, vn, 3, 1.0, ws, wc);
    else
      kernels::serial::nonlinear_coeffs(uo, un, vo, vn, 3, 1.0, ws, wc);
    benchmark::DoNotOptimize(ws.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_sum_abs_pow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f = random_field(n, 5);
  for (auto _ : state) {
    double s;
    if constexpr (Parallel)
      s = kernels::parallel::sum_abs_pow(f, 8.0);
    else
      s = kernels::serial::sum_abs_pow(f, 8.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_step_example1(benchmark::State& state) {
  const Grid g = make_grid(-100, 100, static_cast<std::size_t>(state.range(0)));
  InitialSpec spec;
  spec.kind = InitialKind::example1;
  SchemeParams s;
  Stepper stepper(g, s);
  FieldPair cur = build(spec, g);
  for (auto _ : state) {
    cur = stepper.step(cur).state;
    benchmark::DoNotOptimize(cur.u.data());
  }
  state.counters["threads"] = kernels::thread_count();
}

}  // namespace

BENCHMARK(BM_d_xx<false>)->Name("d_xx/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_d_xx<true>)->Name("d_xx/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_nonlinear<false>)->Name("nonlinear/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_nonlinear<true>)->Name("nonlinear/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_sum_abs_pow<false>)->Name("sum_abs_pow/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_sum_abs_pow<true>)->Name("sum_abs_pow/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_step_example1)->Arg(2049)->Arg(8193)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Serial reference implementations against the segmented OpenMP kernels.
#include <benchmark/benchmark.h>

#include "lf/convolution.hpp"
#include "lf/multiplicative.hpp"
#include "lf/reference.hpp"
#include "lf/sums.hpp"
#include "lf/values.hpp"

using namespace lf;

static void BM_sieve_reference(benchmark::State& state) {
  const auto f = catalog::tau(3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::sieve_values(f, state.range(0)));
}

static void BM_sieve_parallel(benchmark::State& state) {
  const auto f = catalog::tau(3);
  const Exec exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(sieve_values(f, state.range(0), exec));
}

static void BM_convolve_reference(benchmark::State& state) {
  const auto a = sieve_values(catalog::mu_sq(), state.range(0));
  const auto b = sieve_values(catalog::tau(2), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::dirichlet_convolve(a, b));
}

static void BM_convolve_parallel(benchmark::State& state) {
  const auto a = sieve_values(catalog::mu_sq(), state.range(0));
  const auto b = sieve_values(catalog::tau(2), state.range(0));
  const Exec exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_convolve(a, b, exec));
}

static void BM_sum_reference(benchmark::State& state) {
  const auto f = catalog::mu_sq();
  const auto X = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::weighted_sum(f, X, 2, Weight::log_n));
}

static void BM_sum_parallel(benchmark::State& state) {
  const auto f = catalog::mu_sq();
  const auto X = static_cast<double>(state.range(0));
  const Exec exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sum(f, X, 2, Weight::log_n, exec));
}

BENCHMARK(BM_sieve_reference)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_parallel)->Args({1 << 22, 1})->Args({1 << 22, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve_reference)->Arg(1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve_parallel)->Args({1 << 21, 1})->Args({1 << 21, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sum_reference)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sum_parallel)->Args({1 << 22, 1})->Args({1 << 22, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

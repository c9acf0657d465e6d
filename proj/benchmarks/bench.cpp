#include <benchmark/benchmark.h>

#include "hhzeta/expint.hpp"
#include "hhzeta/hyperharm.hpp"
#include "hhzeta/hyperzeta.hpp"
#include "hhzeta/specfun.hpp"
#include "hhzeta/stieltjes.hpp"

static void BM_riemann_zeta(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::riemann_zeta(2.0, 0).value);
}
BENCHMARK(BM_riemann_zeta);

static void BM_hyperharmonic_stream(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hhz::HyperharmonicStream hs(r);
    double acc = 0.0;
    for (long k = 1; k <= 10000; ++k) acc += hs.next();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_hyperharmonic_stream)->Arg(1)->Arg(3);

static void BM_zh_series(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::zh_series(r, r + 1.5, 0).value);
}
BENCHMARK(BM_zh_series)->Arg(1)->Arg(2)->Arg(3);

static void BM_zh_continued(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::zh_continued(r, r + 0.5, 3).value);
}
BENCHMARK(BM_zh_continued)->Arg(1)->Arg(2);

static void BM_gamma_hr_limit(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::gamma_hr_limit(r, 0).value.value);
}
BENCHMARK(BM_gamma_hr_limit)->Arg(1)->Arg(2)->Arg(3);

static void BM_gamma_hr_closed(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::gamma_hr_closed(r, 1).value.value);
}
BENCHMARK(BM_gamma_hr_closed)->Arg(2)->Arg(3);

static void BM_kernel_E_integral(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::kernel_E_integral(p, 0).value);
}
BENCHMARK(BM_kernel_E_integral)->Arg(1)->Arg(2);

static void BM_kernel_E_closed(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hhz::kernel_E_closed(p).value);
}
BENCHMARK(BM_kernel_E_closed)->Arg(2)->Arg(4);

BENCHMARK_MAIN();

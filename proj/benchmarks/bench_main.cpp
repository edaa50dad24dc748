#include <benchmark/benchmark.h>

#include "hyperverify/hyper.hpp"
#include "hyperverify/orthopoly.hpp"
#include "hyperverify/verifier.hpp"

using namespace hyperverify;

static void BM_pfq_2F1(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(hyper::pfq_value({0.3, 0.7}, {1.9}, z));
}
BENCHMARK(BM_pfq_2F1)->Arg(1)->Arg(5)->Arg(8);

static void BM_pfq_0F1(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyper::pfq_value({}, {1.3}, z));
}
BENCHMARK(BM_pfq_0F1)->Arg(1)->Arg(16)->Arg(64);

static void BM_laguerre_table(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ortho::laguerre_table(n, 0.4, 1.7));
  state.SetComplexityN(n);
}
BENCHMARK(BM_laguerre_table)->RangeMultiplier(4)->Range(16, 256)->Complexity(benchmark::oN);

static void BM_eval_double_series(benchmark::State& state) {
  const auto& catalog = catalog::builtin_catalog();
  const auto& d = catalog[static_cast<std::size_t>(state.range(0))];
  const catalog::Point at = catalog::default_point();
  for (auto _ : state) benchmark::DoNotOptimize(verify::eval_double_series(d, at));
  state.SetLabel(d.id);
}
BENCHMARK(BM_eval_double_series)->DenseRange(0, 15);

static void BM_sweep(benchmark::State& state) {
  const unsigned threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (const auto& d : catalog::builtin_catalog()) {
      benchmark::DoNotOptimize(verify::sweep(d, verify::Grid::defaults(), {}, {}, threads));
    }
  }
}
BENCHMARK(BM_sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "logmmp/divisors.hpp"
#include "logmmp/hilbert.hpp"
#include "logmmp/walls.hpp"

namespace {

void BM_TailOracle(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto curve = logmmp::tail_chart(b);
  const auto rho = curve.one_ps(curve.min_genus());
  for (auto _ : state) benchmark::DoNotOptimize(logmmp::standard_monomial_weights(curve.chart, rho, m));
}
BENCHMARK(BM_TailOracle)->ArgsProduct({{2, 3, 4, 5}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_BridgeOracle(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto curve = logmmp::bridge_chart(b);
  const auto rho = curve.one_ps(curve.min_genus());
  for (auto _ : state) benchmark::DoNotOptimize(logmmp::standard_monomial_weights(curve.chart, rho, m));
}
BENCHMARK(BM_BridgeOracle)->ArgsProduct({{2, 3, 4, 5}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_AssembleMu(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (long m = 2; m <= 20; ++m) benchmark::DoNotOptimize(logmmp::mu_bridge(g, 3, logmmp::Rat(m)));
  }
}
BENCHMARK(BM_AssembleMu)->Arg(5)->Arg(50)->Arg(500);

void BM_NefScan(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto d = logmmp::make_l_alpha(g, logmmp::Rat(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(logmmp::nef_scan(d));
}
BENCHMARK(BM_NefScan)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_WallTable(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logmmp::build_wall_table(g));
}
BENCHMARK(BM_WallTable)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();

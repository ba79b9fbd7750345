#include <benchmark/benchmark.h>

#include "rperm/chebyshev.hpp"
#include "rperm/engine.hpp"
#include "rperm/oracle.hpp"
#include "rperm/series.hpp"

using namespace rperm;

static void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t even = 0;
    generate_132_avoiders(n, [&](std::span<const int>, Parity p) { even += p == Parity::kEven; });
    benchmark::DoNotOptimize(even);
  }
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OracleAvoid(benchmark::State& state) {
  const OracleQuery q{static_cast<int>(state.range(0)), {Perm::parse("2134")}, std::nullopt, ParityFilter::kBoth,
                      std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(q).counts.even);
}
BENCHMARK(BM_OracleAvoid)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

// Fresh engine each iteration so the memo does not hide the work.
static void BM_EngineIncreasing(benchmark::State& state) {
  const Perm tau = increasing_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Engine e;
    benchmark::DoNotOptimize(e.gftriple(tau).M);
  }
}
BENCHMARK(BM_EngineIncreasing)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_EngineMixed(benchmark::State& state) {
  const Perm tau = Perm::parse("4563712");
  for (auto _ : state) {
    Engine e;
    benchmark::DoNotOptimize(e.gftriple(tau).M);
  }
}
BENCHMARK(BM_EngineMixed)->Unit(benchmark::kMillisecond);

static void BM_RatFuncArith(benchmark::State& state) {
  const RatFunc a = R(static_cast<int>(state.range(0)));
  const RatFunc b = a.neg();
  for (auto _ : state) benchmark::DoNotOptimize((a + b) * (a - b) / (a * b));
}
BENCHMARK(BM_RatFuncArith)->Arg(8)->Arg(20);

static void BM_SeriesExpand(benchmark::State& state) {
  const RatFunc f = R(12);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(f, order));
}
BENCHMARK(BM_SeriesExpand)->Arg(20)->Arg(60);
BENCHMARK_MAIN();

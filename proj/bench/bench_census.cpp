// Serial reference sweep against the OpenMP sweep.

#include <benchmark/benchmark.h>

#include "msv/census.hpp"

namespace {

msv::CensusOptions options(int n) {
  msv::CensusOptions opts;
  opts.n = n;
  opts.with_mu = true;
  return opts;
}

void BM_CensusSerial(benchmark::State& state) {
  const auto opts = options(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(msv::census_serial(opts));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto opts = options(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(msv::census_parallel(opts));
  state.counters["threads"] = msv::census_threads(opts);
}

BENCHMARK(BM_CensusSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

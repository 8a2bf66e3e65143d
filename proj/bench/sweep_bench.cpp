#include <benchmark/benchmark.h>

#include "degen/sweep.hpp"

using namespace degen;

namespace {

const std::vector<IdentityParams>& bench_tuples() {
  static const std::vector<IdentityParams> tuples = [] {
    SweepGrid g = default_grid();
    g.identities = {IdentityId::thm1, IdentityId::thm2, IdentityId::i_series_consistency};
    g.d = {3, 5};
    g.lambda = {Rational(1, 2), Rational(-2, 3)};
    g.L = 6;
    return expand(g);
  }();
  return tuples;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto& tuples = bench_tuples();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(tuples));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tuples.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto& tuples = bench_tuples();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(tuples, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tuples.size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime()
    ->RangeMultiplier(2)
    ->Range(1, 4);

BENCHMARK_MAIN();

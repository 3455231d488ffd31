#include <benchmark/benchmark.h>

#include "lcmprime/lcm_core.hpp"
#include "lcmprime/nth_prime.hpp"
#include "lcmprime/prime_count.hpp"

namespace {

using lcmprime::Index;
using lcmprime::Variant;

void BM_LcmFresh(benchmark::State& state) {
  const auto j = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcmprime::lcm_fresh(j));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcmFresh)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

void BM_PiStreaming(benchmark::State& state) {
  const auto k = static_cast<Index>(state.range(0));
  for (auto _ : state) {
    lcmprime::PiAccumulator acc;
    acc.advance_to(k);
    benchmark::DoNotOptimize(acc.count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PiStreaming)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

void BM_PiFresh(benchmark::State& state) {
  const auto k = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcmprime::pi_fresh(k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PiFresh)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

template <Variant V>
void BM_NthPrime(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcmprime::nth_prime(n, V).p_n);
  state.SetComplexityN(state.range(0));
}
BENCHMARK_TEMPLATE(BM_NthPrime, Variant::naive)
    ->DenseRange(10, 50, 10)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();
BENCHMARK_TEMPLATE(BM_NthPrime, Variant::memoized)
    ->DenseRange(10, 50, 10)
    ->Arg(100)
    ->Arg(200)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();
BENCHMARK_TEMPLATE(BM_NthPrime, Variant::rs)
    ->DenseRange(10, 50, 10)
    ->Arg(100)
    ->Arg(200)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

}  // namespace

BENCHMARK_MAIN();

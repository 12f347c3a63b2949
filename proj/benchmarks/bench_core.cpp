#include <benchmark/benchmark.h>

#include "ndagg/ndim_agg.hpp"
#include "ndagg/orders.hpp"
#include "ndagg/sampling.hpp"
#include "ndagg/semivector.hpp"

using namespace ndagg;

static void BM_LexTauCompare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler s(1);
  const AdmissibleOrder order(AdmissibleOrderSpec::lexTau(s.permutation(n)));
  std::vector<NDimInterval> xs;
  for (int k = 0; k < 256; ++k) xs.push_back(s.interval(n));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(order.compare(xs[i & 255], xs[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(BM_LexTauCompare)->Arg(2)->Arg(5)->Arg(16)->Arg(64);

static void BM_WeightedLexCompare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler s(2);
  const AdmissibleOrder order(AdmissibleOrderSpec::weightedLex(s.weights(n, true), Permutation::identity(n)));
  std::vector<NDimInterval> xs;
  for (int k = 0; k < 256; ++k) xs.push_back(s.interval(n));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(order.compare(xs[i & 255], xs[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(BM_WeightedLexCompare)->Arg(5)->Arg(64);

static void BM_WeightedAverage(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  Sampler s(3);
  const NDimAggregation f = ndimWeightedAverage(s.weights(m, true), AdmissibleOrder(AdmissibleOrderSpec::lexTau(Permutation::identity(5))));
  std::vector<NDimInterval> xs;
  for (std::size_t k = 0; k < m; ++k) xs.push_back(s.interval(5));
  for (auto _ : state) benchmark::DoNotOptimize(f(xs));
}
BENCHMARK(BM_WeightedAverage)->Arg(4)->Arg(16)->Arg(64);

static void BM_OWA(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  Sampler s(4);
  const NDimAggregation f = ndimOWA(AdmissibleOrder(AdmissibleOrderSpec::lexTau(Permutation::identity(5))), s.weights(m, true));
  std::vector<NDimInterval> xs;
  for (std::size_t k = 0; k < m; ++k) xs.push_back(s.interval(5));
  for (auto _ : state) benchmark::DoNotOptimize(f(xs));
}
BENCHMARK(BM_OWA)->Arg(4)->Arg(16)->Arg(64);

static void BM_NaturalPreorder(benchmark::State& state) {
  Sampler s(5);
  const NDimInterval x = s.interval(16), y = vecAdd(x, s.interval(16));
  for (auto _ : state) benchmark::DoNotOptimize(naturalPreorderLeq(x, y));
}
BENCHMARK(BM_NaturalPreorder);

static void BM_OrderCompatibility(benchmark::State& state) {
  const AdmissibleOrder order(AdmissibleOrderSpec::lexTau(Permutation::identity(5)));
  const SamplingConfig cfg{kDefaultSeed, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(checkOrderCompatibility(order, cfg));
}
BENCHMARK(BM_OrderCompatibility)->Arg(1000)->Unit(benchmark::kMillisecond);

#include <benchmark/benchmark.h>

#include "ndagg/mcgdm.hpp"

using namespace ndagg;

static void BM_ExamplePipeline(benchmark::State& state) {
  const DecisionProblem p = energy::problem();
  for (auto _ : state) benchmark::DoNotOptimize(runPipeline(p));
}
BENCHMARK(BM_ExamplePipeline)->Unit(benchmark::kMicrosecond);

// Random p × m × n problems at the service size limit and below.
static void BM_RandomPipeline(benchmark::State& state) {
  Sampler s(9);
  const ProblemGenerator gen(AggregatorFamily::WeightedAverage, static_cast<std::size_t>(state.range(0)));
  const DecisionProblem p = gen(s);
  for (auto _ : state) benchmark::DoNotOptimize(runPipeline(p));
  state.counters["cells"] = static_cast<double>(p.p() * p.m() * p.n());
}
BENCHMARK(BM_RandomPipeline)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_Sensitivity(benchmark::State& state) {
  const DecisionProblem p = energy::problem();
  const std::vector<Edit> edits = {CubeEdit{2, 4, 3, 0.1}};
  for (auto _ : state) benchmark::DoNotOptimize(sensitivity(p, edits));
}
BENCHMARK(BM_Sensitivity)->Unit(benchmark::kMicrosecond);

static void BM_Principles(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(checkPrinciples(ProblemGenerator(AggregatorFamily::OWA, 6), 10, 5));
  }
}
BENCHMARK(BM_Principles)->Unit(benchmark::kMillisecond);

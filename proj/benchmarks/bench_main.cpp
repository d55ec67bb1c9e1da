#include <benchmark/benchmark.h>

#include "petriforge/coverability.hpp"
#include "petriforge/models.hpp"
#include "petriforge/pnml.hpp"
#include "petriforge/reachability.hpp"
#include "petriforge/simulate.hpp"

using namespace petriforge;

namespace {

MarkedNet model(std::int64_t variant, std::int64_t p) {
  ModelParams q;
  q.p = static_cast<std::uint64_t>(p);
  return build_model(static_cast<ModelVariant>(variant), q);
}

void BM_Reachability(benchmark::State& state) {
  const MarkedNet mn = model(state.range(0), state.range(1));
  std::size_t nodes = 0;
  for (auto _ : state) {
    const auto g = build_reachability_graph(mn);
    nodes = g.node_count();
    benchmark::DoNotOptimize(nodes);
  }
  state.counters["states"] = static_cast<double>(nodes);
  state.counters["states/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Reachability)
    ->ArgsProduct({{0, 1, 2}, {1, 2, 4, 11}})
    ->ArgNames({"variant", "p"})
    ->Unit(benchmark::kMillisecond);

void BM_Coverability(benchmark::State& state) {
  const MarkedNet mn = model(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_coverability_graph(mn).node_count());
}
BENCHMARK(BM_Coverability)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) {
    for (auto v : {ModelVariant::ACoranica, ModelVariant::OSchinzii,
                   ModelVariant::OSchinziiNoGoBackHome}) {
      benchmark::DoNotOptimize(sweep_people(v, {}, 1, 11));
    }
  }
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_EnabledSet(benchmark::State& state) {
  const MarkedNet mn = model(0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(enabled_set(mn.net(), mn.initial()));
}
BENCHMARK(BM_EnabledSet);

void BM_MaxConcurrency(benchmark::State& state) {
  const MarkedNet mn = model(1, 2);
  const auto g = build_reachability_graph(mn);
  for (auto _ : state) benchmark::DoNotOptimize(max_concurrency_over(mn.net(), g));
}
BENCHMARK(BM_MaxConcurrency)->Unit(benchmark::kMillisecond);

void BM_RandomRun(benchmark::State& state) {
  const MarkedNet mn = model(0, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_run(mn, seed++, 10000).steps.size());
}
BENCHMARK(BM_RandomRun);

void BM_PnmlRoundTrip(benchmark::State& state) {
  const MarkedNet mn = model(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(parse_pnml(write_pnml(mn)).net);
}
BENCHMARK(BM_PnmlRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

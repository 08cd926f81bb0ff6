#include <benchmark/benchmark.h>

#include "sandpile/dynamics.hpp"
#include "sandpile/forests.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/rodometer.hpp"

using namespace sandpile;

namespace {

Sandpile tall_pile(const Multigraph& g, long height) {
  IntVector values(g.non_sink_count());
  values[values.size() / 2] = height;
  return Sandpile(g, values);
}

void BM_StabilizeWheel(benchmark::State& state) {
  const auto g = wheel(static_cast<std::size_t>(state.range(0)));
  const auto sigma = tall_pile(g, 10'000);
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(g, sigma));
}
BENCHMARK(BM_StabilizeWheel)->Arg(8)->Arg(32)->Arg(128);

void BM_StabilizePath(benchmark::State& state) {
  const auto g = path(static_cast<std::size_t>(state.range(0)));
  const auto sigma = tall_pile(g, 1'000);
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(g, sigma));
}
BENCHMARK(BM_StabilizePath)->Arg(16)->Arg(64);

void BM_ROdometerGeneral(benchmark::State& state) {
  const auto g = wheel(static_cast<std::size_t>(state.range(0)));
  const ReducedLaplacian lap(g);
  const auto sigma = tall_pile(g, 500);
  for (auto _ : state) benchmark::DoNotOptimize(r_odometer(g, lap, sigma));
}
BENCHMARK(BM_ROdometerGeneral)->Arg(8)->Arg(16)->Arg(32);

void BM_ROdometerUniformlyLarge(benchmark::State& state) {
  const auto g = wheel(static_cast<std::size_t>(state.range(0)));
  const ReducedLaplacian lap(g);
  IntVector values = stability_threshold(g);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += static_cast<long>(i % 7);
  const Sandpile sigma(g, values);
  for (auto _ : state) benchmark::DoNotOptimize(r_odometer(g, lap, sigma));
}
BENCHMARK(BM_ROdometerUniformlyLarge)->Arg(8)->Arg(16)->Arg(32);

void BM_DetBareiss(benchmark::State& state) {
  const auto m = reduced_laplacian(wheel(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(m));
}
BENCHMARK(BM_DetBareiss)->Arg(16)->Arg(64)->Arg(128);

void BM_InverseExact(benchmark::State& state) {
  const auto m = reduced_laplacian(complete(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_exact(m));
}
BENCHMARK(BM_InverseExact)->Arg(8)->Arg(24);

void BM_SpanningTreeEnumeration(benchmark::State& state) {
  const auto g = wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_spanning_trees(g));
}
BENCHMARK(BM_SpanningTreeEnumeration)->Arg(6)->Arg(8)->Arg(9);

void BM_ForestTally(benchmark::State& state) {
  const auto g = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tally_constrained_forests(g, 2));
}
BENCHMARK(BM_ForestTally)->Arg(5)->Arg(6);

}  // namespace
BENCHMARK_MAIN();

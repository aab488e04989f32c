#include <benchmark/benchmark.h>

#include <vector>

#include "cantor/cantor.hpp"

namespace {

using namespace cantor;

RadixSystem mixed() { return RadixSystem({5, 2, 7}, {2}); }

void BM_Phi(benchmark::State& state) {
  const RadixSystem sys = mixed();
  const LevelPoint p = LevelPoint::top(sys, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi(p));
}
BENCHMARK(BM_Phi)->Arg(4)->Arg(12)->Arg(40);

void BM_RankUnrank(benchmark::State& state) {
  const RadixSystem sys = mixed();
  const auto level = static_cast<std::size_t>(state.range(0));
  const LevelPoint p = LevelPoint::top(sys, level);
  for (auto _ : state) benchmark::DoNotOptimize(unrank(sys, level, rank(p)));
}
BENCHMARK(BM_RankUnrank)->Arg(8)->Arg(40);

// The inner step of the exhaustive interval sweep.
void BM_PushforwardInterval(benchmark::State& state) {
  const RadixSystem sys = mixed();
  const LevelPoint a = unrank(sys, 10, 17);
  const LevelPoint b = unrank(sys, 10, 6000);
  for (auto _ : state) benchmark::DoNotOptimize(check_pushforward_interval(a, b));
}
BENCHMARK(BM_PushforwardInterval);

void BM_SetUnion(benchmark::State& state) {
  const RadixSystem sys({}, {3});
  const ClopenSet s = ClopenSet::interval(LevelPoint(sys, {0, 1, 2, 0}), LevelPoint(sys, {1, 0, 0, 1}));
  const ClopenSet t = ClopenSet::interval(LevelPoint(sys, {1, 2}), LevelPoint(sys, {2, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(set_union(s, set_complement(t)));
}
BENCHMARK(BM_SetUnion);

void BM_IsoPoint(benchmark::State& state) {
  const RadixSystem from({}, {2});
  const RadixSystem to({}, {2, 3});
  const LevelPoint x(from, {1, 0, 1, 1, 0, 1, 0, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(iso_point(x, from, to, 64));
}
BENCHMARK(BM_IsoPoint);

void BM_UniformityTest(benchmark::State& state) {
  const SamplerConfig cfg{RadixSystem({}, {2, 3}), 40, static_cast<std::size_t>(state.range(0)), 42, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(run_uniformity_test(cfg));
}
BENCHMARK(BM_UniformityTest)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ValidateGroup(benchmark::State& state) {
  const FiniteGroup g = dihedral_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_group(g));
}
BENCHMARK(BM_ValidateGroup)->Arg(4)->Arg(30);

}  // namespace
BENCHMARK_MAIN();

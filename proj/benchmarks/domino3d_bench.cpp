#include <benchmark/benchmark.h>

#include <random>

#include "domino3d/moves.hpp"
#include "domino3d/realize.hpp"
#include "domino3d/socks.hpp"

using namespace domino3d;

static void BM_CountBox(benchmark::State& state) {
  auto r = make_box(int(state.range(0)), 3);
  EnumerationOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r, opt));
  state.SetLabel(std::to_string(count_tilings(r)) + " tilings");
}
BENCHMARK(BM_CountBox)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CountBoxThreaded(benchmark::State& state) {
  auto r = make_box(7, 3);
  EnumerationOptions opt;
  opt.threads = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r, opt));
}
BENCHMARK(BM_CountBoxThreaded)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_TilingSet(benchmark::State& state) {
  auto r = make_box(int(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tiling_set(r).size());
}
BENCHMARK(BM_TilingSet)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_FlipComponents(benchmark::State& state) {
  auto r = make_box(int(state.range(0)), 3);
  auto set = enumerate_tiling_set(r);
  auto g = canonical_ghosts(r);
  for (auto _ : state) benchmark::DoNotOptimize(flip_components(set, g).components.size());
}
BENCHMARK(BM_FlipComponents)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_Invariant(benchmark::State& state) {
  auto r = make_box(7, 3);
  auto tilings = all_tilings(r, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invariant(tilings[i++ % tilings.size()], r, {}));
}
BENCHMARK(BM_Invariant);

static void BM_Untangle(benchmark::State& state) {
  std::mt19937_64 rng(1);
  RandomSockOptions opt;
  opt.moves = int(state.range(0));
  std::vector<Sock> socks;
  for (int i = 0; i < 16; ++i) socks.push_back(random_sock(rng, opt));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(untangle(socks[i++ % socks.size()]).trace.size());
}
BENCHMARK(BM_Untangle)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_ReplayReduction(benchmark::State& state) {
  auto r = make_box(4, 4);
  auto tilings = all_tilings(r, 512);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(replay_reduction(tilings[i++ % tilings.size()], r).steps.size());
}
BENCHMARK(BM_ReplayReduction)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();

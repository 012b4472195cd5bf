#include <benchmark/benchmark.h>

#include "divide_forge/census.hpp"
#include "divide_forge/fiber.hpp"
#include "divide_forge/map_generator.hpp"

using namespace dforge;

static void BM_CanonicalForm(benchmark::State& state) {
  const auto d = family(FamilyKind::BirkhoffFried, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
  state.SetLabel(std::to_string(d.map().dart_count()) + " darts");
}
BENCHMARK(BM_CanonicalForm)->DenseRange(1, 5);

static void BM_RootedMaps(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_rooted_maps(n));
}
BENCHMARK(BM_RootedMaps)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
  CensusOptions opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_divides(static_cast<int>(state.range(0)), opt));
  }
}
BENCHMARK(BM_Census)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_BuildFiber(benchmark::State& state) {
  const auto d = family(FamilyKind::Brunella, static_cast<int>(state.range(0)));
  const auto col = checkerboard(d);
  for (auto _ : state) benchmark::DoNotOptimize(build_fiber(d, col));
}
BENCHMARK(BM_BuildFiber)->DenseRange(1, 5, 2);

static void BM_HomologicalMonodromy(benchmark::State& state) {
  const auto d = family(FamilyKind::Minimal, static_cast<int>(state.range(0)));
  const auto col = checkerboard(d);
  const auto fiber = build_fiber(d, col);
  const auto cycles = vanishing_cycles(d, col);
  const auto word = monodromy_word(d);
  for (auto _ : state) benchmark::DoNotOptimize(homological_monodromy(fiber, cycles, word));
}
BENCHMARK(BM_HomologicalMonodromy)->DenseRange(1, 5, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

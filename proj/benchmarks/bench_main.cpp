#include <benchmark/benchmark.h>

#include "loopforge/decomposition.hpp"
#include "loopforge/enumerate.hpp"
#include "loopforge/equivalence.hpp"
#include "loopforge/extensions.hpp"
#include "loopforge/gallery.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/morphisms.hpp"

using namespace loopforge;

static void BM_EnumerateLoops(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_loops(n, {}, {1}));
}
BENCHMARK(BM_EnumerateLoops)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_EnumerateRightBol8(benchmark::State& state) {
  PropertyFilter const filter = parse_filter("rightBol");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_loops(8, filter, {1}));
}
BENCHMARK(BM_EnumerateRightBol8)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_FindIsomorphism(benchmark::State& state) {
  LoopTable const a = schreier_loop(fixture_s3f());
  LoopTable const b = schreier_loop(shift_data(fixture_s3f(), FiniteMap(6, {0, 3})));
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_FindIsomorphism);

static void BM_SchreierLoop(benchmark::State& state) {
  LoopTable const s3 = symmetric_group(3);
  SchreierData const d = example_commutator(s3, s3, FiniteMap(6, {0, 3, 4})).data;
  for (auto _ : state) benchmark::DoNotOptimize(schreier_loop(d));
}
BENCHMARK(BM_SchreierLoop);

static void BM_Decompose(benchmark::State& state) {
  LoopTable const s3 = symmetric_group(3);
  SchreierData const d = example_commutator(s3, s3, FiniteMap(6, {0, 3, 4})).data;
  LoopTable const l = schreier_loop(d);
  ElementSubset const g = embedded_subgroup(d.carrier());
  DataPair const pair = canonical_pair(l, g, ElementSubset(l.order(), {0, 6, 12, 18, 24, 30}));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(l, g, pair));
}
BENCHMARK(BM_Decompose);

static void BM_Equivalent(benchmark::State& state) {
  SchreierData const d = fixture_s3f();
  SchreierData const e = shift_data(d, FiniteMap(6, {0, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(wide_equivalent(d, e));
}
BENCHMARK(BM_Equivalent);

BENCHMARK_MAIN();

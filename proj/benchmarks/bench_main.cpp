#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "metramsey/geometry.hpp"
#include "metramsey/lipschitz.hpp"
#include "metramsey/pumpkin.hpp"
#include "metramsey/ramsey.hpp"

using namespace metramsey;

static void BM_Hausdorff(benchmark::State& state) {
  Rng rng(1);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = testgen::polytope(rng, d, 8, 64);
  const auto b = testgen::polytope(rng, d, 8, 64);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(1)->Arg(2)->Arg(3);

static void BM_PumpkinDist(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = testgen::sphere_tuple(rng, 2, n, 64);
  const auto y = testgen::perturb(rng, x, 3, 64);
  const auto p = pp_colour(x);
  const auto q = pp_colour(y);
  for (auto _ : state) benchmark::DoNotOptimize(pumpkin_dist(p, q, Scalar(1, 1000)));
}
BENCHMARK(BM_PumpkinDist)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Leq(benchmark::State& state) {
  Rng rng(3);
  const auto k = testgen::metric_space(rng, 3, 4);
  const auto l = testgen::metric_space(rng, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(leq(k, l));
}
BENCHMARK(BM_Leq)->Arg(4)->Arg(6)->Arg(8);

static void BM_MinColoursK6(benchmark::State& state) {
  const auto s = triangle_system(6);
  for (auto _ : state) benchmark::DoNotOptimize(min_colours_over_subcopies(s, 2));
}
BENCHMARK(BM_MinColoursK6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ccgt/ball.hpp"
#include "ccgt/canonical.hpp"
#include "ccgt/girth.hpp"
#include "ccgt/halfspace.hpp"
#include "ccgt/median.hpp"
#include "ccgt/pocset.hpp"

using namespace ccgt;

static void BM_hyperplane_extraction(benchmark::State &state) {
  auto g = make_grid(static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HalfspaceSystem hs(g);
    benchmark::DoNotOptimize(hs.count());
  }
}
BENCHMARK(BM_hyperplane_extraction)->Arg(5)->Arg(10)->Arg(14);

static void BM_median_validation(benchmark::State &state) {
  auto g = make_grid(static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = validate_median(g);
    benchmark::DoNotOptimize(r.is_median);
  }
}
BENCHMARK(BM_median_validation)->Arg(4)->Arg(6);

static void BM_tree_ball_construction(benchmark::State &state) {
  for (auto _ : state) {
    auto b = free_group_ball(2, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(b.complex.num_vertices());
  }
}
BENCHMARK(BM_tree_ball_construction)->Arg(6)->Arg(8)->Arg(10);

static void BM_pair_classification(benchmark::State &state) {
  auto g = make_grid(6, 6);
  for (auto _ : state) {
    HalfspaceSystem hs(g);
    int strong = 0;
    for (int p = 0; p < hs.count(); ++p)
      for (int q = p + 1; q < hs.count(); ++q)
        strong += hs.classify(p, q).strongly_separated;
    benchmark::DoNotOptimize(strong);
  }
}
BENCHMARK(BM_pair_classification);

static void BM_duality_roundtrip(benchmark::State &state) {
  auto g = make_hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HalfspaceSystem hs(g);
    auto d = Pocset::from_complex(hs).dual_complex();
    benchmark::DoNotOptimize(isomorphic(d, g));
  }
}
BENCHMARK(BM_duality_roundtrip)->Arg(3)->Arg(4)->Arg(5);

static void BM_cayley_girth(benchmark::State &state) {
  auto g = symmetric_group(4);
  std::vector<int> gens{g.generator_element(0), g.generator_element(1)};
  for (auto _ : state) {
    auto r = girth_cayley(g, gens);
    benchmark::DoNotOptimize(r.girth);
  }
}
BENCHMARK(BM_cayley_girth);

BENCHMARK_MAIN();

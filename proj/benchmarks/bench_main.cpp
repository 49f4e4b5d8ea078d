#include <benchmark/benchmark.h>

#include "normcov/clique.hpp"
#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/enumerate.hpp"
#include "normcov/reduction.hpp"
#include "normcov/search.hpp"

using namespace normcov;

static void BM_BuildGc(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_gc(c));
}
BENCHMARK(BM_BuildGc)->DenseRange(8, 14, 2);

static void BM_VerifyRbCover(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const LabeledRB family = state.range(1) ? build_fc(c) : build_gc(c);
  for (auto _ : state) benchmark::DoNotOptimize(verify_rb_cover(family.rb, family.cover));
  state.SetLabel(state.range(1) ? "F_c" : "G_c");
}
BENCHMARK(BM_VerifyRbCover)->Args({10, 1})->Args({12, 0});

static void BM_MaximumClique(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const Graph g = realize_type(build_gc(c).rb, RandomPairs{0.5, 1});
  for (auto _ : state) benchmark::DoNotOptimize(maximum_clique(g));
}
BENCHMARK(BM_MaximumClique)->DenseRange(5, 8);

static void BM_FindCover(benchmark::State& state) {
  const LabeledRB g3 = build_gc(3);
  const Graph g = realize_type(g3.rb, RandomPairs{0.5, 2});
  for (auto _ : state) benchmark::DoNotOptimize(find_cover(g, 3, 3));
}
BENCHMARK(BM_FindCover);

static void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7);

static void BM_Pipeline(benchmark::State& state) {
  const LabeledRB f = build_fc(static_cast<std::size_t>(state.range(0)));
  const Graph g = realize_type(f.rb, AllAbsent{});
  for (auto _ : state) benchmark::DoNotOptimize(reduction_pipeline(g, f.cover, f.c, f.s));
}
BENCHMARK(BM_Pipeline)->DenseRange(4, 6);
BENCHMARK_MAIN();

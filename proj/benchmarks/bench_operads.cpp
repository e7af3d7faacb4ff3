#include <benchmark/benchmark.h>

#include "operads/composition.hpp"
#include "operads/lawcheck.hpp"
#include "operads/parse.hpp"

using namespace operads;

namespace {

FiniteSet numeric_set(int n) {
  std::vector<Label> labels;
  for (int i = 1; i <= n; ++i) labels.emplace_back(std::to_string(i));
  return FiniteSet(std::move(labels));
}

}  // namespace

static void BM_EnumerateRootedTrees(benchmark::State& state) {
  const FiniteSet labels = numeric_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rooted_trees(labels));
}
BENCHMARK(BM_EnumerateRootedTrees)->DenseRange(4, 6);

static void BM_EnumeratePlanarRootedTrees(benchmark::State& state) {
  const FiniteSet labels = numeric_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_planar_rooted_trees(labels));
}
BENCHMARK(BM_EnumeratePlanarRootedTrees)->DenseRange(3, 5);

static void BM_EnumeratePartitions(benchmark::State& state) {
  const FiniteSet labels = numeric_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(labels));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(5, 8);

static void BM_PrelieCompose(benchmark::State& state) {
  // four branches into a four-vertex target: 4^4 reattachment terms
  const auto u = parse_rooted_tree("s(1,2,3,4)");
  const auto v = parse_rooted_tree("a(b(c),d)");
  for (auto _ : state) benchmark::DoNotOptimize(prelie_compose(u, "s", v));
}
BENCHMARK(BM_PrelieCompose);

static void BM_ShuffleMagCompose(benchmark::State& state) {
  // two branch lists of three: binomial(6,3) = 20 interleavings
  const auto t = parse_planar_tree("1(2(3,4,5))");
  const auto u = parse_planar_tree("a(b,c,d)");
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_mag_compose(t, "2", u));
}
BENCHMARK(BM_ShuffleMagCompose);

static void BM_BoxCompose(benchmark::State& state) {
  const OperadInstance nap = nap_operad();
  const CompositionElement x(
      Partition(FiniteSet{"1", "2", "3"}, {FiniteSet{"1", "2"}, FiniteSet{"3"}}),
      RootedTree("1", {{"3", "1"}}),
      {{"1", parse_rooted_tree("1(2)")}, {"3", RootedTree::single("3")}});
  const CompositionElement y(
      Partition(FiniteSet{"a", "b"}, {FiniteSet{"a"}, FiniteSet{"b"}}),
      RootedTree("a", {{"b", "a"}}),
      {{"a", RootedTree::single("a")}, {"b", RootedTree::single("b")}});
  for (auto _ : state) benchmark::DoNotOptimize(box_compose(x, "2", y, nap));
}
BENCHMARK(BM_BoxCompose);

static void BM_AxiomSuite(benchmark::State& state) {
  const auto ops = operad_instances();
  const auto& op = ops[static_cast<std::size_t>(state.range(0))];
  const Bounds bounds{2, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom_suite(op, bounds));
  state.SetLabel(op.name());
}
BENCHMARK(BM_AxiomSuite)->DenseRange(0, 3);

static void BM_RootExchangeSweep(benchmark::State& state) {
  const OperadInstance shmag = shuffle_mag_operad();
  const Bounds bounds{2, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(check_eq1(shmag, bounds));
}
BENCHMARK(BM_RootExchangeSweep);

static void BM_CompositionDimension(benchmark::State& state) {
  const OperadInstance nap = nap_operad();
  const FiniteSet labels = numeric_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(composition_dimension(nap, nap, labels));
}
BENCHMARK(BM_CompositionDimension)->DenseRange(3, 5);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "bngraph/brill_noether.hpp"
#include "bngraph/divisor.hpp"
#include "bngraph/enumerate.hpp"
#include "bngraph/jacobian.hpp"
#include "bngraph/rank.hpp"

namespace {

using namespace bng;

Multigraph by_index(int i) {
  switch (i) {
    case 0: return families::complete(4);
    case 1: return families::chain_of_loops(3);
    default: return families::complete(6);
  }
}

Divisor scattered(const Multigraph& g, std::int64_t degree, unsigned seed) {
  std::mt19937 rng(seed);
  Divisor d(g);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = coeff(rng);
  d[0] += degree - d.degree();
  return d;
}

void BM_Reduce(benchmark::State& state) {
  const Multigraph g = by_index(static_cast<int>(state.range(0)));
  const Divisor d = scattered(g, g.genus(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(d));
  state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_Reduce)->DenseRange(0, 2);

void BM_Rank(benchmark::State& state) {
  const Multigraph g = families::chain_of_loops(3);
  const Divisor d = scattered(g, state.range(0), 11);
  const bool memoize = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(rank(d, {.base = 0, .memoize = memoize}));
}
BENCHMARK(BM_Rank)->ArgsProduct({{2, 3, 4}, {0, 1}})->ArgNames({"deg", "memo"});

void BM_Smith(benchmark::State& state) {
  const IntMatrix m = reduced_laplacian(families::complete(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_PicardRepresentatives(benchmark::State& state) {
  const Multigraph g = families::chain_of_loops(3);
  for (auto _ : state) benchmark::DoNotOptimize(picard_representatives(g, 2));
}
BENCHMARK(BM_PicardRepresentatives);

void BM_EnumerateCubic(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cubic(g));
}
BENCHMARK(BM_EnumerateCubic)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClassRanks(benchmark::State& state) {
  const Multigraph g = families::chain_of_loops(3);
  for (auto _ : state) benchmark::DoNotOptimize(class_ranks(g, 3, true));
}
BENCHMARK(BM_ClassRanks)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

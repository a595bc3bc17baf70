#include <benchmark/benchmark.h>

#include "gbh/graded_module.hpp"
#include "gbh/homology.hpp"
#include "gbh/oracle.hpp"

using namespace gbh;

static void BM_EnumerateBasis(benchmark::State& state) {
  Graph g = star_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto slice = enumerate_basis(g, 1, 5, /*reduced=*/true);
    benchmark::DoNotOptimize(slice.basis.size());
  }
}
BENCHMARK(BM_EnumerateBasis)->Arg(3)->Arg(5)->Arg(8);

static void BM_SmithBoundary(benchmark::State& state) {
  Graph g = complete_bipartite(2, 3);
  SwComplex complex(g, /*reduced=*/true);
  IntegerMatrix d = complex.boundary(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto snf = smith_normal_form(d, /*with_transforms=*/false);
    benchmark::DoNotOptimize(snf.rank());
  }
}
BENCHMARK(BM_SmithBoundary)->Arg(2)->Arg(3)->Arg(4);

static void BM_ConfigurationHomology(benchmark::State& state) {
  Graph g = complete_bipartite(2, 3);
  for (auto _ : state) {
    SwComplex complex(g, /*reduced=*/true);
    auto h = configuration_homology(complex, 1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(h.free_rank);
  }
}
BENCHMARK(BM_ConfigurationHomology)->Arg(2)->Arg(3);

static void BM_OracleHomology(benchmark::State& state) {
  Graph g = star_graph(3);
  for (auto _ : state) {
    auto h = oracle_homology(g, static_cast<int>(state.range(0)), 1);
    benchmark::DoNotOptimize(h.free_rank);
  }
}
BENCHMARK(BM_OracleHomology)->Arg(2)->Arg(3);

static void BM_TruncatedModule(benchmark::State& state) {
  Graph g = star_graph(static_cast<int>(state.range(0)));
  RationalField field;
  for (auto _ : state) {
    auto m = truncated_module(g, 1, 4, /*reduced=*/true, field);
    benchmark::DoNotOptimize(m.dims.back());
  }
}
BENCHMARK(BM_TruncatedModule)->Arg(3)->Arg(5);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

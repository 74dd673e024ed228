#include <benchmark/benchmark.h>

#include <vector>

#include "dispheres/grid.hpp"
#include "dispheres/planner.hpp"
#include "dispheres/sample.hpp"

using namespace dispheres;

static void BM_IsReachable(benchmark::State& state) {
  const std::size_t dims = static_cast<std::size_t>(state.range(0));
  sample::Rng rng(1);
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 512; ++i) pairs.push_back(sample::boundary_ordered_pair(rng, dims, 16));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ & 511];
    benchmark::DoNotOptimize(planner::is_reachable(x, y));
  }
}
BENCHMARK(BM_IsReachable)->Arg(2)->Arg(4)->Arg(6);

static void BM_PlanStaircase(benchmark::State& state) {
  const std::size_t dims = static_cast<std::size_t>(state.range(0));
  sample::Rng rng(2);
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 256; ++i) pairs.push_back(sample::reachable_pair(rng, dims, 16));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ & 255];
    benchmark::DoNotOptimize(planner::plan(x, y));
  }
}
BENCHMARK(BM_PlanStaircase)->Arg(2)->Arg(4)->Arg(6);

static void BM_ContractHomotopy(benchmark::State& state) {
  sample::Rng rng(3);
  const Dipath gamma = sample::monotone_dipath(rng, 3, 6, 16);
  const planner::PlannerOrder order = planner::PlannerOrder::identity(3);
  const Rat t = rat(1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(planner::contract_homotopy(gamma, t, order));
  }
}
BENCHMARK(BM_ContractHomotopy);

static void BM_GridBuild(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const oracle::GridGraph g(3, m);
    benchmark::DoNotOptimize(g.vertex_count());
  }
}
BENCHMARK(BM_GridBuild)->Arg(2)->Arg(4)->Arg(8);

static void BM_OracleBfs(benchmark::State& state) {
  const oracle::GridGraph g(3, 4);
  std::size_t src = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::reachable_from(g, static_cast<oracle::VertexId>(src)));
    src = (src + 1) % g.vertex_count();
  }
}
BENCHMARK(BM_OracleBfs);

static void BM_EnumerateSlice(benchmark::State& state) {
  const oracle::GridGraph g(2, static_cast<std::size_t>(state.range(0)));
  const int m = g.resolution();
  const std::vector<int> from{0, 0, 0};
  const std::vector<int> to{m, m, 0};
  const auto a = g.vertex_id(from);
  const auto b = g.vertex_id(to);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::enumerate_dipaths(g, a, b, 1'000'000));
  }
}
BENCHMARK(BM_EnumerateSlice)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();

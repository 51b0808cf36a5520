#include <benchmark/benchmark.h>

#include "plancol/color_reduce.hpp"
#include "plancol/engine.hpp"
#include "plancol/generators.hpp"
#include "plancol/pipeline.hpp"
#include "plancol/removable.hpp"
#include "plancol/structure.hpp"

using namespace plancol;

namespace {

// K4, triangle, pentagon, K4 strung along cut vertices
Graph bench_cactus() {
  EdgeList edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                 {4, 5}, {4, 6}, {5, 6},
                 {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 6},
                 {10, 11}, {10, 12}, {10, 13}, {11, 12}, {11, 13}, {12, 13}};
  std::vector<VertexId> vertices;
  for (VertexId v = 1; v <= 13; ++v) vertices.push_back(v);
  return Graph::from_edges(vertices, edges);
}

void bm_collect_ball(benchmark::State& state) {
  Graph g = grid_graph(24, 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect_ball(g, 3));
  }
}
BENCHMARK(bm_collect_ball);

void bm_best_removable_cycle(benchmark::State& state) {
  Graph g = grid_graph(16, 16);
  VertexId center = 8 * 16 + 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_removable_cycle(g, center, 4, 4));
  }
}
BENCHMARK(bm_best_removable_cycle);

void bm_plan_linial_chain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_linial_chain(1'000'000, 4));
  }
}
BENCHMARK(bm_plan_linial_chain);

void bm_reduce_colors(benchmark::State& state) {
  Graph g = cycle_graph(256);
  std::unordered_map<VertexId, std::int64_t> ids;
  for (VertexId v : g.vertices()) ids[v] = v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_colors(g, 2, ids));
  }
}
BENCHMARK(bm_reduce_colors);

void bm_pipeline_grid(benchmark::State& state) {
  Graph g = grid_graph(8, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(g, Preset::four_col));
  }
}
BENCHMARK(bm_pipeline_grid);

void bm_charge_procedure(benchmark::State& state) {
  Graph g = bench_cactus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(charge_procedure(g));
  }
}
BENCHMARK(bm_charge_procedure);

void bm_triangulation(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(triangulation_graph(500, 1));
  }
}
BENCHMARK(bm_triangulation);

}  // namespace

BENCHMARK_MAIN();

#include <doctest.h>

#include "plancol/generators.hpp"
#include "plancol/pipeline.hpp"

using namespace plancol;

namespace {

void check_result(const Graph& g, const PipelineResult& r, int palette) {
  auto report = is_proper(g, r.coloring, true);
  INFO(report.describe());
  REQUIRE(report.proper);
  CHECK(r.coloring.palette_size == palette);
  CHECK(static_cast<std::int64_t>(r.coloring.colors.size()) == g.vertex_count());
  CHECK(r.busy_rounds > 0);
  CHECK(r.levels >= 1);
}

bool same_coloring(const PipelineResult& a, const PipelineResult& b) {
  return a.coloring.colors == b.coloring.colors;
}

}  // namespace

TEST_CASE("four colors on a square grid") {
  Graph g = grid_graph(8, 8);
  auto r = run_pipeline(g, Preset::four_col);
  check_result(g, r, 4);
  CHECK(r.worst_shrink <= 0.99);
  CHECK(r.super_degree_max < r.params.super_palette);
  CHECK(same_coloring(r, run_pipeline(g, Preset::four_col)));
}

TEST_CASE("four colors on a hex grid") {
  Graph g = hex_grid_graph(6, 6);
  check_result(g, run_pipeline(g, Preset::four_col), 4);
}

TEST_CASE("four colors on a long cycle") {
  Graph g = cycle_graph(12);
  auto r = run_pipeline(g, Preset::four_col);
  check_result(g, r, 4);
}

TEST_CASE("four colors on a subdivided triangulation") {
  Graph g = subdivided_triangulation_graph(60, 3);
  auto r = run_pipeline(g, Preset::four_col);
  check_result(g, r, 4);
  CHECK(r.worst_shrink <= 0.99);
}

TEST_CASE("six colors on a triangulation") {
  Graph g = triangulation_graph(125, 1);
  auto r = run_pipeline(g, Preset::six_col);
  check_result(g, r, 6);
  CHECK(r.worst_shrink <= 0.999);
  CHECK(r.super_degree_max < r.params.super_palette);
}

TEST_CASE("six colors on a complete four graph") {
  Graph g = complete_graph(4);
  check_result(g, run_pipeline(g, Preset::six_col), 6);
}

TEST_CASE("six colors on a fan and a maximal outerplanar graph") {
  check_result(outerplanar_fan_graph(9), run_pipeline(outerplanar_fan_graph(9), Preset::six_col), 6);
  Graph g = maximal_outerplanar_graph(40, 7);
  check_result(g, run_pipeline(g, Preset::six_col), 6);
}

TEST_CASE("empty graph produces an empty coloring") {
  Graph g = Graph::from_edges({}, {});
  auto r = run_pipeline(g, Preset::four_col);
  CHECK(r.coloring.colors.empty());
  CHECK(is_proper(g, r.coloring, true).proper);
}

TEST_CASE("single vertex gets the first color") {
  Graph g = Graph::from_edges({7}, {});
  auto r = run_pipeline(g, Preset::six_col);
  CHECK(r.coloring.color_of(7) == 1);
}

TEST_CASE("step order does not change the outcome") {
  Graph g = triangulation_graph(60, 4);
  EngineOptions a, b;
  a.step_order_seed = 11;
  b.step_order_seed = 977;
  auto ra = run_pipeline(g, Preset::six_col, a);
  auto rb = run_pipeline(g, Preset::six_col, b);
  CHECK(same_coloring(ra, rb));
  CHECK(ra.busy_rounds == rb.busy_rounds);
}

TEST_CASE("preset parameters scale with the input size") {
  auto small = preset_params(Preset::four_col, 64);
  auto large = preset_params(Preset::four_col, 4096);
  CHECK(small.cycle_len_max == large.cycle_len_max);
  CHECK(small.iterations < large.iterations);
  CHECK(small.palette == 4);
  CHECK(preset_params(Preset::six_col, 64).palette == 6);
}

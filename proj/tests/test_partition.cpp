#include <doctest.h>

#include "plancol/errors.hpp"
#include "plancol/generators.hpp"
#include "plancol/partition.hpp"
#include "support.hpp"

using namespace plancol;

TEST_CASE("preset parameters follow the published constants") {
  auto p4 = partition_params_4col(4096);
  CHECK(p4.cycle_len_max == 4);
  CHECK(p4.deg_threshold == 4);
  CHECK(p4.collect_radius == 3);
  CHECK(p4.iterations == 1 + 70 * 12);
  CHECK(p4.palette == 4);
  CHECK(p4.phase2_colors == 5);
  CHECK(p4.super_palette == 1024);
  CHECK(p4.span() == 2);

  auto p6 = partition_params_6col(2000);
  CHECK(p6.cycle_len_max == 10);
  CHECK(p6.deg_threshold == 6);
  CHECK(p6.collect_radius == 6);
  CHECK(p6.iterations == 1 + 700 * 11);
  CHECK(p6.palette == 6);
  CHECK(p6.phase2_colors == 7);
  CHECK(p6.super_palette == 362797056);  // 6^11
  CHECK(p6.span() == 5);

  CHECK(partition_params_4col(1).iterations == partition_params_4col(2).iterations);
  CHECK(partition_params_4col(3).iterations == 1 + 70 * 2);
}

TEST_CASE("a path has no cycles so everything lands in phase 2") {
  Graph g = path_graph(3);
  auto params = partition_params_4col(3);
  auto result = run_partition(g, params);
  CHECK(result.max_level == 1);
  for (VertexId v : g.vertices()) {
    CHECK(result.label_of(v) == Label{1, 2});
    CHECK(result.keys.at(v) == std::vector<VertexId>{v});
  }
  audit_keys(g, result, params);
}

TEST_CASE("a lone square is one level-one cycle") {
  Graph g = cycle_graph(4);
  auto params = partition_params_4col(4);
  auto result = run_partition(g, params);
  CHECK(result.max_level == 1);
  for (VertexId v : g.vertices()) {
    CHECK(result.label_of(v) == Label{1, 1});
    CHECK(result.keys.at(v) == std::vector<VertexId>{1, 2, 3, 4});
  }
  audit_keys(g, result, params);
}

TEST_CASE("an odd hole is not removable and falls through to phase 2") {
  Graph g = cycle_graph(5);
  auto result = run_partition(g, partition_params_4col(5));
  for (VertexId v : g.vertices()) CHECK(result.label_of(v) == Label{1, 2});
}

TEST_CASE("every grid vertex sits on a removable square") {
  Graph g = grid_graph(8, 8);
  auto params = partition_params_4col(64);
  auto result = run_partition(g, params);
  CHECK(result.max_level == 1);
  for (VertexId v : g.vertices()) CHECK(result.label_of(v) == Label{1, 1});
  auto shrink = shrink_profile(result, 64);
  REQUIRE(shrink.size() == 1);
  CHECK(shrink[0] == std::pair<std::int64_t, std::int64_t>{64, 0});
  audit_keys(g, result, params);
}

TEST_CASE("girth six inputs skip phase 1 under the short cycle cap") {
  Graph g = hex_grid_graph(5, 6);
  auto result = run_partition(g, partition_params_4col(30));
  for (VertexId v : g.vertices()) CHECK(result.label_of(v).phase == 2);
}

TEST_CASE("triangles and cliques survive step 1 under the 6 color preset") {
  Graph g = complete_graph(4);
  auto result = run_partition(g, partition_params_6col(4));
  for (VertexId v : g.vertices()) CHECK(result.label_of(v) == Label{1, 2});
}

TEST_CASE("partition handles multi level inputs") {
  // a triangulation big enough that one layer cannot swallow everything
  Graph g = triangulation_graph(60, 2);
  auto params = partition_params_6col(60);
  auto result = run_partition(g, params);
  CHECK(result.labels.size() == static_cast<std::size_t>(g.vertex_count()));
  CHECK(result.max_level >= 1);
  audit_keys(g, result, params);
  auto shrink = shrink_profile(result, g.vertex_count());
  for (auto [active, remaining] : shrink) {
    CHECK(active > 0);
    CHECK(remaining < active);  // strict progress on every audited iteration
  }
}

TEST_CASE("partition output is independent of intra round step order") {
  Graph g = subdivided_triangulation_graph(40, 4);
  auto params = partition_params_4col(g.vertex_count());
  auto plain = run_partition(g, params);
  EngineOptions opt;
  opt.step_order_seed = 5;
  auto shuffled = run_partition(g, params, opt);
  for (VertexId v : g.vertices()) {
    CHECK(plain.label_of(v) == shuffled.label_of(v));
    CHECK(plain.keys.at(v) == shuffled.keys.at(v));
  }
}

TEST_CASE("shrinkage audit wraps a fresh run") {
  Graph g = grid_graph(4, 4);
  auto shrink = shrinkage_audit(g, partition_params_4col(16));
  REQUIRE(!shrink.empty());
  CHECK(shrink[0].first == 16);
}

TEST_CASE("audit_keys rejects corrupted keys") {
  Graph g = cycle_graph(4);
  auto params = partition_params_4col(4);
  auto result = run_partition(g, params);
  result.keys.at(1) = {1, 2, 3};  // no longer the stored cycle
  CHECK_THROWS_AS(audit_keys(g, result, params), InternalCheckError);
}

TEST_CASE("step 1 fixpoint residuals") {
  // grids dissolve completely: every vertex keeps landing on a removable square
  Graph grid = grid_graph(6, 6);
  CHECK(partition_step1_residual(grid, 4, 4).vertex_count() == 0);

  // cactus blocks are complete or odd, so the fixpoint is immediate
  Graph cactus = testsup::cactus_graph(12, 3);
  Graph residual = partition_step1_residual(cactus, 10, 6);
  CHECK(residual.vertices() == cactus.vertices());
  CHECK(residual.edges() == cactus.edges());

  // mixed case: a hexagon dissolves even with the degree cap ignored
  CHECK(partition_step1_residual(cycle_graph(6), 10).vertex_count() == 0);
  CHECK(partition_step1_residual(cycle_graph(5), 10).vertex_count() == 5);
}

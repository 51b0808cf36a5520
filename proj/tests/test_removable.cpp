#include <doctest.h>

#include <set>

#include "plancol/errors.hpp"
#include "plancol/generators.hpp"
#include "plancol/removable.hpp"
#include "support.hpp"

using namespace plancol;

namespace {
Graph petersen() {
  // outer 5-cycle 1..5, inner 5-star 6..10, spokes i -> i+5
  EdgeList edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                 {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                 {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}};
  return Graph::from_edges({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, edges);
}

Graph chorded_c5() {
  EdgeList edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}};
  return Graph::from_edges({1, 2, 3, 4, 5}, edges);
}
}  // namespace

TEST_CASE("removability verdicts on the canonical shapes") {
  CHECK(is_removable(cycle_graph(4), Cycle{{1, 2, 3, 4}}).removable);
  CHECK(is_removable(cycle_graph(6), Cycle{{1, 2, 3, 4, 5, 6}}).removable);

  auto c5 = is_removable(cycle_graph(5), Cycle{{1, 2, 3, 4, 5}});
  CHECK(!c5.removable);
  CHECK(c5.reason == RemovabilityVerdict::Reason::odd_cycle_graph);

  auto k3 = is_removable(complete_graph(3), Cycle{{1, 2, 3}});
  CHECK(!k3.removable);
  CHECK(k3.reason == RemovabilityVerdict::Reason::complete);

  Graph k4 = complete_graph(4);
  CHECK(!is_removable(k4, Cycle{{1, 2, 3, 4}}).removable);
  CHECK(is_removable(chorded_c5(), Cycle{{1, 2, 3, 4, 5}}).removable);
}

TEST_CASE("cycle_degree is the max degree over members") {
  Graph fan = outerplanar_fan_graph(6);
  CHECK(cycle_degree(fan, Cycle{{1, 2, 3}}) == 5);  // the hub dominates
}

TEST_CASE("cycles_through enumerates each cycle once") {
  CHECK(cycles_through(complete_graph(3), 1, 5).size() == 1);
  CHECK(cycles_through(complete_graph(4), 1, 4).size() == 6);  // 3 triangles + 3 squares
  CHECK(cycles_through(complete_graph(4), 1, 3).size() == 3);
  CHECK(cycles_through(grid_graph(3, 3), 1, 4).size() == 1);
  CHECK(cycles_through(path_graph(5), 2, 10).empty());

  // the degree restriction prunes cycles through high degree vertices
  Graph fan = outerplanar_fan_graph(6);
  auto constrained = cycles_through(fan, 2, 3, 2);
  CHECK(constrained.empty());  // every triangle of the fan uses the hub
}

TEST_CASE("K4 yields no removable cycle from any anchor") {
  Graph k4 = complete_graph(4);
  for (VertexId v : k4.vertices()) {
    CHECK(enumerate_removable(k4, 10, 6, v, 6).empty());
    CHECK(best_removable_cycle(k4, v, 10, 6) == std::nullopt);
  }
}

TEST_CASE("best_removable_cycle picks the least key deterministically") {
  Graph g = grid_graph(3, 3);
  auto best = best_removable_cycle(g, 5, 4, 4);
  REQUIRE(best.has_value());
  CHECK(best->canonical_key() == std::vector<VertexId>{1, 2, 4, 5});
  auto corner = best_removable_cycle(g, 9, 4, 4);
  REQUIRE(corner.has_value());
  CHECK(corner->canonical_key() == std::vector<VertexId>{5, 6, 8, 9});
}

TEST_CASE("enumerate_removable respects the degree cap") {
  Graph fan = outerplanar_fan_graph(8);  // hub degree 7
  CHECK(enumerate_removable(fan, 10, 6, 2, 6).empty());
}

TEST_CASE("hamiltonian cycle recovery on member sets") {
  Graph c4 = cycle_graph(4);
  auto cyc = hamiltonian_cycle_on(c4, {1, 2, 3, 4});
  REQUIRE(cyc.has_value());
  CHECK(cyc->sequence == std::vector<VertexId>{1, 2, 3, 4});

  CHECK(hamiltonian_cycle_on(path_graph(4), {1, 2, 3, 4}) == std::nullopt);
  CHECK(hamiltonian_cycle_on(c4, {1, 2}) == std::nullopt);
  CHECK_THROWS_AS(hamiltonian_cycle_on(c4, std::vector<VertexId>{1, 2, 2, 3}), PreconditionError);

  auto k4cyc = hamiltonian_cycle_on(complete_graph(4), {1, 2, 3, 4});
  REQUIRE(k4cyc.has_value());
  CHECK(k4cyc->sequence == std::vector<VertexId>{1, 2, 3, 4});

  Graph c6 = cycle_graph(6);
  auto sub = hamiltonian_cycle_on(c6, {1, 2, 3});
  CHECK(sub == std::nullopt);  // {1,2,3} induces a path in the hexagon
}

TEST_CASE("list coloring oracle") {
  Graph k3 = complete_graph(3);
  std::map<VertexId, std::vector<int>> tight{{1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}};
  CHECK(color_with_lists(k3, tight) == std::nullopt);

  std::map<VertexId, std::vector<int>> ok{{1, {1, 2}}, {2, {1, 2}}, {3, {1, 2, 3}}};
  auto got = color_with_lists(k3, ok);
  REQUIRE(got.has_value());
  CHECK(is_proper(k3, *got, true).proper);
  CHECK(got->color_of(3) == 3);

  std::map<VertexId, std::vector<int>> empty_list{{1, {}}, {2, {1}}, {3, {1}}};
  CHECK(color_with_lists(k3, empty_list) == std::nullopt);
}

TEST_CASE("brooks coloring covers the classic cases") {
  Graph even = cycle_graph(8);
  auto c = brooks_color(even, 2);
  CHECK(is_proper(even, c, true).proper);

  CHECK_THROWS_AS(brooks_color(cycle_graph(5), 2), PreconditionError);
  CHECK_THROWS_AS(brooks_color(complete_graph(4), 3), PreconditionError);

  auto k4relaxed = brooks_color(complete_graph(4), 4);
  CHECK(is_proper(complete_graph(4), k4relaxed, true).proper);

  Graph p = petersen();
  auto pc = brooks_color(p, 3);
  CHECK(is_proper(p, pc, true).proper);
  int max_color = 0;
  for (auto [v, col] : pc.colors) max_color = std::max(max_color, col);
  CHECK(max_color <= 3);
}

TEST_CASE("extend_on_cycle completes an empty surrounding") {
  Graph c4 = cycle_graph(4);
  ColorAssignment none;
  none.palette_size = 2;
  auto got = extend_on_cycle(c4, Cycle{{1, 2, 3, 4}}, none, 2);
  CHECK(is_proper(c4, got, true).proper);

  Graph g = chorded_c5();
  ColorAssignment none3;
  none3.palette_size = 3;
  auto got3 = extend_on_cycle(g, Cycle{{1, 2, 3, 4, 5}}, none3, 3);
  CHECK(is_proper(g, got3, true).proper);
}

TEST_CASE("extend_on_cycle validates its preconditions") {
  Graph c4 = cycle_graph(4);
  ColorAssignment bad;
  bad.palette_size = 2;
  bad.set(2, 1);  // cycle vertex already colored
  CHECK_THROWS_AS(extend_on_cycle(c4, Cycle{{1, 2, 3, 4}}, bad, 2), PreconditionError);

  ColorAssignment none;
  none.palette_size = 3;
  CHECK_THROWS_AS(extend_on_cycle(complete_graph(3), Cycle{{1, 2, 3}}, none, 3),
                  PreconditionError);  // not removable
  CHECK_THROWS_AS(extend_on_cycle(cycle_graph(5), Cycle{{1, 2, 3, 4, 5}}, none, 3),
                  PreconditionError);  // odd hole
}

TEST_CASE("seeded extension instances always extend and match the oracle") {
  using namespace testsup;
  int ran = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    ExtensionInstance inst = extension_instance(seed);
    REQUIRE(is_removable(inst.g, inst.cycle).removable);
    REQUIRE(cycle_degree(inst.g, inst.cycle) <= inst.delta);
    CHECK(extension_exists_oracle(inst));

    ColorAssignment full = extend_on_cycle(inst.g, inst.cycle, inst.partial, inst.delta);
    CHECK(is_proper(inst.g, full, false).proper);
    for (VertexId v : inst.cycle.sequence) {
      CHECK(full.color_of(v) != 0);
      CHECK(full.color_of(v) <= inst.delta);
    }
    for (const auto& [v, col] : inst.partial.colors) CHECK(full.color_of(v) == col);
    ++ran;
  }
  CHECK(ran == 200);
}

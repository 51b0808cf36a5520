#include <doctest.h>

#include "plancol/errors.hpp"
#include "plancol/generators.hpp"
#include "plancol/graph.hpp"

using namespace plancol;

TEST_CASE("from_edges builds sorted deduplicated adjacency") {
  Graph g = Graph::from_edges({3, 1, 2}, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertices() == std::vector<VertexId>{1, 2, 3});
  CHECK(g.neighbors(2) == std::vector<VertexId>{1, 3});
  CHECK(g.degree(2) == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(1, 3));
  CHECK(g.edges() == EdgeList{{1, 2}, {2, 3}});
}

TEST_CASE("isolated vertices survive construction") {
  Graph g = Graph::from_edges({5, 9}, {});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);
  CHECK(g.neighbors(9).empty());
}

TEST_CASE("self loops are rejected and edge endpoints enroll themselves") {
  CHECK_THROWS_AS(Graph::from_edges({1, 2}, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges({1, -2}, {}), InputError);
  Graph grown = Graph::from_edges({1, 2}, {{1, 3}});
  CHECK(grown.vertex_count() == 3);
  CHECK(grown.has_vertex(3));
  Graph g = Graph::from_edges({1}, {});
  CHECK_THROWS_AS(g.neighbors(7), InputError);
  CHECK_THROWS_AS((void)g.index_of(7), InputError);
}

TEST_CASE("index mapping round trips") {
  Graph g = Graph::from_edges({10, 2, 7}, {{2, 7}});
  for (VertexId v : g.vertices()) CHECK(g.id_at(g.index_of(v)) == v);
}

TEST_CASE("cycle canonicalization is rotation and reflection invariant") {
  Cycle a{{3, 1, 2}};
  Cycle b{{1, 3, 2}};
  CHECK(a.canonicalized().sequence == b.canonicalized().sequence);
  CHECK(a.canonical_key() == std::vector<VertexId>{1, 2, 3});

  Cycle c{{4, 9, 2, 6}};
  Cycle d{{2, 9, 4, 6}};  // same cyclic order read backwards from elsewhere
  CHECK(c.canonicalized().sequence == d.canonicalized().sequence);
  CHECK(c.canonicalized().sequence.front() == 2);
}

TEST_CASE("validate_cycle accepts real cycles and rejects the rest") {
  Graph g = cycle_graph(5);
  validate_cycle(g, Cycle{{1, 2, 3, 4, 5}});
  CHECK_THROWS_AS(validate_cycle(g, Cycle{{1, 2, 3}}), InputError);       // no closing edge
  CHECK_THROWS_AS(validate_cycle(g, Cycle{{1, 2}}), InputError);          // too short
  CHECK_THROWS_AS(validate_cycle(g, Cycle{{1, 2, 3, 2, 5}}), InputError); // repeat
}

TEST_CASE("is_proper reports the first witness") {
  Graph g = path_graph(3);
  ColorAssignment c;
  c.palette_size = 2;
  c.set(1, 1), c.set(2, 1), c.set(3, 2);
  auto report = is_proper(g, c, true);
  CHECK(!report.proper);
  CHECK(report.conflict_edge == std::pair<VertexId, VertexId>{1, 2});

  c.set(2, 2), c.set(3, 1);
  CHECK(is_proper(g, c, true).proper);

  ColorAssignment partial = c;
  partial.colors.erase(3);
  CHECK(is_proper(g, partial, false).proper);
  auto missing = is_proper(g, partial, true);
  CHECK(!missing.proper);
  CHECK(missing.uncolored_vertex == 3);

  c.set(1, 9);
  auto over = is_proper(g, c, true);
  CHECK(!over.proper);
  CHECK(over.out_of_palette_vertex == 1);
}

TEST_CASE("ball and bfs distances agree on a path") {
  Graph g = path_graph(7);
  CHECK(ball(g, 4, 0) == std::vector<VertexId>{4});
  CHECK(ball(g, 4, 1) == std::vector<VertexId>{3, 4, 5});
  CHECK(ball(g, 4, 2) == std::vector<VertexId>{2, 3, 4, 5, 6});
  auto dist = bfs_distances(g, 1, -1);
  CHECK(dist.at(7) == 6);
  auto capped = bfs_distances(g, 1, 2);
  CHECK(capped.count(3) == 1);
  CHECK(capped.count(4) == 0);
}

TEST_CASE("induced subgraph keeps internal edges only") {
  Graph g = cycle_graph(6);
  Graph h = induced_subgraph(g, {1, 2, 3, 5});
  CHECK(h.vertex_count() == 4);
  CHECK(h.edges() == EdgeList{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(induced_subgraph(g, {1, 99}), InputError);
}

TEST_CASE("shortest_cycle_through finds the girth cycle") {
  Graph grid = grid_graph(3, 3);
  auto c = shortest_cycle_through(grid, 1, 10);
  REQUIRE(c.has_value());
  CHECK(c->length() == 4);
  CHECK(c->canonical_key() == std::vector<VertexId>{1, 2, 4, 5});

  CHECK(shortest_cycle_through(path_graph(5), 3, 10) == std::nullopt);
  auto five = shortest_cycle_through(cycle_graph(5), 2, 10);
  REQUIRE(five.has_value());
  CHECK(five->length() == 5);
  CHECK(shortest_cycle_through(cycle_graph(5), 2, 4) == std::nullopt);
}

TEST_CASE("check_edge_bound verifies the girth precondition") {
  CHECK(check_edge_bound(cycle_graph(7), 7));
  CHECK(check_edge_bound(path_graph(10), 7));
  CHECK_THROWS_AS(check_edge_bound(cycle_graph(6), 7), PreconditionError);
  CHECK_THROWS_AS(check_edge_bound(grid_graph(3, 3), 5), PreconditionError);
}

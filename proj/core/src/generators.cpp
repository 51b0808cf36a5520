#include "plancol/generators.hpp"

#include <array>

#include "plancol/errors.hpp"

namespace plancol {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("uniform_below: bound must be positive");
  // Reject the low sliver so the accepted range is an exact multiple of bound.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

namespace {

std::vector<VertexId> iota_ids(std::int64_t n) {
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  return ids;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

}  // namespace

Graph grid_graph(std::int64_t rows, std::int64_t cols) {
  require(rows >= 1 && cols >= 1, "grid_graph: rows and cols must be >= 1");
  auto id = [cols](std::int64_t r, std::int64_t c) { return r * cols + c + 1; };
  EdgeList edges;
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(iota_ids(rows * cols), edges);
}

Graph hex_grid_graph(std::int64_t rows, std::int64_t cols) {
  require(rows >= 1 && cols >= 1, "hex_grid_graph: rows and cols must be >= 1");
  auto id = [cols](std::int64_t r, std::int64_t c) { return r * cols + c + 1; };
  EdgeList edges;
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows && (r + c) % 2 == 0) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(iota_ids(rows * cols), edges);
}

Graph triangulation_graph(std::int64_t n, std::uint64_t seed) {
  require(n >= 3, "triangulation_graph: need at least 3 vertices");
  std::mt19937_64 rng(seed);
  EdgeList edges = {{1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<VertexId, 3>> faces = {{1, 2, 3}};
  for (VertexId v = 4; v <= n; ++v) {
    std::size_t pick = uniform_below(rng, faces.size());
    auto [a, b, c] = faces[pick];
    edges.push_back({a, v});
    edges.push_back({b, v});
    edges.push_back({c, v});
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return Graph::from_edges(iota_ids(n), edges);
}

Graph subdivided_triangulation_graph(std::int64_t target_n, std::uint64_t seed) {
  require(target_n >= 3, "subdivided_triangulation_graph: need target size >= 3");
  // |V| = m + (3m - 6) after subdividing, so pick the smallest m that reaches
  // the target.
  std::int64_t m = std::max<std::int64_t>(3, (target_n + 6 + 3) / 4);
  Graph base = triangulation_graph(m, seed);
  EdgeList edges;
  VertexId mid = m;
  for (const auto& [u, v] : base.edges()) {
    ++mid;
    edges.push_back({u, mid});
    edges.push_back({mid, v});
  }
  return Graph::from_edges(iota_ids(mid), edges);
}

Graph outerplanar_fan_graph(std::int64_t n) {
  require(n >= 1, "outerplanar_fan_graph: need at least 1 vertex");
  EdgeList edges;
  for (VertexId v = 2; v <= n; ++v) {
    edges.push_back({1, v});
    if (v + 1 <= n) edges.push_back({v, v + 1});
  }
  return Graph::from_edges(iota_ids(n), edges);
}

Graph maximal_outerplanar_graph(std::int64_t n, std::uint64_t seed) {
  require(n >= 3, "maximal_outerplanar_graph: need at least 3 vertices");
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (VertexId v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
  // Triangulate the polygon: split the chord (i, j) at a random interior
  // vertex and recurse on both sides. Depth is at most n, explicit stack
  // avoids any tail-call worry.
  std::vector<std::pair<VertexId, VertexId>> stack = {{1, n}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    VertexId k = i + 1 + static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(j - i - 1)));
    if (k - i > 1) edges.push_back({i, k});
    if (j - k > 1) edges.push_back({k, j});
    stack.push_back({i, k});
    stack.push_back({k, j});
  }
  return Graph::from_edges(iota_ids(n), edges);
}

Graph path_graph(std::int64_t n) {
  require(n >= 1, "path_graph: need at least 1 vertex");
  EdgeList edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(iota_ids(n), edges);
}

Graph cycle_graph(std::int64_t n) {
  require(n >= 3, "cycle_graph: need at least 3 vertices");
  EdgeList edges;
  for (VertexId v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
  return Graph::from_edges(iota_ids(n), edges);
}

Graph complete_graph(std::int64_t k) {
  require(k >= 1, "complete_graph: need at least 1 vertex");
  EdgeList edges;
  for (VertexId u = 1; u <= k; ++u) {
    for (VertexId v = u + 1; v <= k; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(iota_ids(k), edges);
}

}  // namespace plancol

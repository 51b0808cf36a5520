#include "plancol/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace plancol {

Graph Graph::from_edges(std::vector<VertexId> vertices, const EdgeList& edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw InputError("self loop at vertex " + std::to_string(u));
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (VertexId v : vertices) {
    if (v <= 0) throw InputError("vertex ids must be positive, got " + std::to_string(v));
  }

  Graph g;
  g.ids_ = std::move(vertices);
  g.adj_.resize(g.ids_.size());
  g.index_.reserve(g.ids_.size());
  for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_[g.ids_[i]] = static_cast<int>(i);

  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    g.adj_[g.index_[u]].push_back(v);
    g.adj_[g.index_[v]].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nbrs = adj_[index_.at(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::checked_index(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (VertexId w : adj_[i]) {
      if (ids_[i] < w) out.emplace_back(ids_[i], w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Cycle::canonical_key() const {
  std::vector<VertexId> key = sequence;
  std::sort(key.begin(), key.end());
  return key;
}

Cycle Cycle::canonicalized() const {
  const std::size_t k = sequence.size();
  if (k == 0) return *this;
  std::size_t start = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (sequence[i] < sequence[start]) start = i;
  }
  std::vector<VertexId> fwd(k), rev(k);
  for (std::size_t i = 0; i < k; ++i) {
    fwd[i] = sequence[(start + i) % k];
    rev[i] = sequence[(start + k - i) % k];
  }
  return Cycle{std::min(fwd, rev)};
}

void validate_cycle(const Graph& g, const Cycle& c) {
  const auto& seq = c.sequence;
  if (seq.size() < 3) throw InputError("cycle needs at least 3 vertices");
  std::set<VertexId> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) throw InputError("cycle repeats a vertex");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VertexId a = seq[i];
    VertexId b = seq[(i + 1) % seq.size()];
    if (!g.has_vertex(a)) throw InputError("cycle vertex " + std::to_string(a) + " not in graph");
    if (!g.has_edge(a, b)) {
      throw InputError("cycle edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} missing from graph");
    }
  }
}

std::string ProperReport::describe() const {
  if (proper) return "proper";
  std::ostringstream os;
  if (conflict_edge) {
    os << "edge {" << conflict_edge->first << "," << conflict_edge->second
       << "} has equal endpoint colors";
  } else if (uncolored_vertex) {
    os << "vertex " << *uncolored_vertex << " is uncolored";
  } else if (out_of_palette_vertex) {
    os << "vertex " << *out_of_palette_vertex << " is colored outside the palette";
  }
  return os.str();
}

ProperReport is_proper(const Graph& g, const ColorAssignment& coloring, bool require_total) {
  ProperReport report;
  for (VertexId v : g.vertices()) {
    int c = coloring.color_of(v);
    if (c == 0) {
      if (require_total) {
        report.proper = false;
        report.uncolored_vertex = v;
        return report;
      }
      continue;
    }
    if (c < 1 || c > coloring.palette_size) {
      report.proper = false;
      report.out_of_palette_vertex = v;
      return report;
    }
  }
  for (VertexId v : g.vertices()) {
    int cv = coloring.color_of(v);
    if (cv == 0) continue;
    for (VertexId w : g.neighbors(v)) {
      if (w < v) continue;
      if (coloring.color_of(w) == cv) {
        report.proper = false;
        report.conflict_edge = {v, w};
        return report;
      }
    }
  }
  return report;
}

std::unordered_map<VertexId, std::int64_t> bfs_distances(const Graph& g, VertexId center,
                                                         std::int64_t cap) {
  std::unordered_map<VertexId, std::int64_t> dist;
  dist[center] = 0;
  if (!g.has_vertex(center)) throw InputError("unknown vertex " + std::to_string(center));
  std::deque<VertexId> queue{center};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    std::int64_t d = dist[v];
    if (cap >= 0 && d == cap) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist.emplace(w, d + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

std::vector<VertexId> ball(const Graph& g, VertexId center, std::int64_t radius) {
  if (radius < 0) throw InputError("negative radius");
  auto dist = bfs_distances(g, center, radius);
  std::vector<VertexId> out;
  out.reserve(dist.size());
  for (const auto& [v, d] : dist) {
    (void)d;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& members) {
  std::set<VertexId> keep;
  for (VertexId v : members) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    keep.insert(v);
  }
  EdgeList edges;
  for (VertexId v : keep) {
    for (VertexId w : g.neighbors(v)) {
      if (v < w && keep.count(w)) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(std::vector<VertexId>(keep.begin(), keep.end()), edges);
}

namespace {

// Depth-first enumeration of simple cycles through `anchor`, shortest first.
// Uses iterative deepening so the first hit is a shortest cycle; within one
// length, candidate paths are explored in ascending neighbor order which makes
// the returned sequence deterministic.
struct CycleSearch {
  const Graph& g;
  VertexId anchor;
  std::vector<VertexId> path;
  std::set<VertexId> on_path;
  std::int64_t target_len;
  const std::unordered_map<VertexId, std::int64_t>& dist_to_anchor;
  std::optional<Cycle> found;

  void dfs() {
    if (found) return;
    VertexId cur = path.back();
    std::int64_t len = static_cast<std::int64_t>(path.size());
    if (len == target_len) {
      if (g.has_edge(cur, anchor) && path[1] < path.back()) found = Cycle{path};
      return;
    }
    for (VertexId w : g.neighbors(cur)) {
      if (w == anchor || on_path.count(w)) continue;
      auto it = dist_to_anchor.find(w);
      if (it == dist_to_anchor.end()) continue;
      // Must still be able to close the cycle within the remaining budget.
      if (it->second > target_len - len) continue;
      path.push_back(w);
      on_path.insert(w);
      dfs();
      on_path.erase(w);
      path.pop_back();
      if (found) return;
    }
  }
};

}  // namespace

std::optional<Cycle> shortest_cycle_through(const Graph& g, VertexId v, std::int64_t max_len) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (max_len < 3) return std::nullopt;
  auto dist = bfs_distances(g, v, max_len / 2 + 1);
  for (std::int64_t len = 3; len <= max_len; ++len) {
    CycleSearch search{g, v, {v}, {v}, len, dist, std::nullopt};
    search.dfs();
    if (search.found) return search.found->canonicalized();
  }
  return std::nullopt;
}

bool check_edge_bound(const Graph& g, std::int64_t girth_lower) {
  if (girth_lower < 3) throw InputError("girth bound must be at least 3");
  for (VertexId v : g.vertices()) {
    if (auto c = shortest_cycle_through(g, v, girth_lower - 1)) {
      std::ostringstream os;
      os << "graph has a cycle of length " << c->length() << " through vertex " << v
         << ", shorter than required girth " << girth_lower;
      throw PreconditionError(os.str());
    }
  }
  // |E| <= g/(g-2) |V|, compared in exact integer arithmetic.
  return (girth_lower - 2) * g.edge_count() <= girth_lower * g.vertex_count();
}

}  // namespace plancol

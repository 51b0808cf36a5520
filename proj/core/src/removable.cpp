#include "plancol/removable.hpp"

#include <algorithm>
#include <set>

#include "plancol/errors.hpp"

namespace plancol {

std::int64_t cycle_degree(const Graph& g, const Cycle& c) {
  validate_cycle(g, c);
  std::int64_t deg = 0;
  for (VertexId v : c.sequence) deg = std::max(deg, g.degree(v));
  return deg;
}

RemovabilityVerdict is_removable(const Graph& g, const Cycle& c) {
  validate_cycle(g, c);
  const auto members = c.canonical_key();
  const auto k = static_cast<std::int64_t>(members.size());
  std::int64_t induced_edges = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.has_edge(members[i], members[j])) ++induced_edges;
    }
  }
  RemovabilityVerdict verdict;
  if (induced_edges == k * (k - 1) / 2) {
    verdict.removable = false;
    verdict.reason = RemovabilityVerdict::Reason::complete;
  } else if (k % 2 == 1 && induced_edges == k) {
    // The induced graph contains the cycle itself, so with exactly |C| edges
    // and odd length it is an odd cycle graph.
    verdict.removable = false;
    verdict.reason = RemovabilityVerdict::Reason::odd_cycle_graph;
  } else {
    verdict.removable = true;
    verdict.reason = RemovabilityVerdict::Reason::even_or_chorded_ok;
  }
  return verdict;
}

void for_each_cycle_through(const Graph& h, VertexId anchor, std::int64_t max_len,
                            std::int64_t deg_threshold,
                            const std::function<bool(const std::vector<VertexId>&)>& visit) {
  if (!h.has_vertex(anchor)) throw PreconditionError("cycle search anchor not in graph");
  if (max_len < 3) return;
  auto eligible = [&](VertexId v) { return deg_threshold < 0 || h.degree(v) <= deg_threshold; };
  if (!eligible(anchor)) return;

  // Distances within the eligible subgraph, for pruning: a partial path of
  // `len` vertices ending at w can only close into a cycle of length
  // >= len + dist(w).
  std::unordered_map<VertexId, std::int64_t> dist;
  {
    std::vector<VertexId> frontier = {anchor};
    dist[anchor] = 0;
    for (std::int64_t d = 1; d <= max_len / 2 + 1 && !frontier.empty(); ++d) {
      std::vector<VertexId> next;
      for (VertexId u : frontier) {
        for (VertexId w : h.neighbors(u)) {
          if (eligible(w) && !dist.count(w)) {
            dist[w] = d;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<VertexId> path = {anchor};
  std::set<VertexId> on_path = {anchor};
  bool stop = false;

  auto dfs = [&](auto&& self, VertexId at) -> void {
    if (stop) return;
    const auto len = static_cast<std::int64_t>(path.size());
    for (VertexId w : h.neighbors(at)) {
      if (stop) return;
      if (w == anchor) {
        // Count each cycle once: fix the orientation by requiring the second
        // vertex to be smaller than the last.
        if (len >= 3 && path[1] < path.back()) {
          if (!visit(path)) stop = true;
        }
        continue;
      }
      if (len >= max_len || !eligible(w) || on_path.count(w)) continue;
      auto it = dist.find(w);
      if (it == dist.end() || it->second + len > max_len) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, w);
      path.pop_back();
      on_path.erase(w);
    }
  };
  dfs(dfs, anchor);
}

namespace {

void sort_canonical(std::vector<Cycle>& cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    auto ka = a.canonical_key(), kb = b.canonical_key();
    return ka != kb ? ka < kb : a.sequence < b.sequence;
  });
}

}  // namespace

std::vector<Cycle> cycles_through(const Graph& h, VertexId anchor, std::int64_t max_len,
                                  std::int64_t deg_threshold) {
  std::vector<Cycle> out;
  for_each_cycle_through(h, anchor, max_len, deg_threshold,
                         [&](const std::vector<VertexId>& path) {
                           out.push_back(Cycle{path}.canonicalized());
                           return true;
                         });
  sort_canonical(out);
  return out;
}

std::vector<Cycle> enumerate_removable(const Graph& g, std::int64_t max_len, std::int64_t max_deg,
                                       VertexId through, std::int64_t radius) {
  if (radius < max_len / 2 + 1) {
    throw PreconditionError("enumerate_removable: radius too small for the cycle length bound");
  }
  Graph local = induced_subgraph(g, ball(g, through, radius));
  std::vector<Cycle> out;
  for_each_cycle_through(local, through, max_len, max_deg,
                         [&](const std::vector<VertexId>& path) {
                           Cycle c{path};
                           if (is_removable(local, c).removable) {
                             out.push_back(c.canonicalized());
                           }
                           return true;
                         });
  sort_canonical(out);
  return out;
}

std::optional<Cycle> best_removable_cycle(const Graph& h, VertexId anchor, std::int64_t max_len,
                                          std::int64_t deg_threshold) {
  std::optional<Cycle> best;
  std::vector<VertexId> best_key;
  for_each_cycle_through(h, anchor, max_len, deg_threshold,
                         [&](const std::vector<VertexId>& path) {
                           Cycle c{path};
                           if (!is_removable(h, c).removable) return true;
                           auto key = c.canonical_key();
                           Cycle canon = c.canonicalized();
                           if (!best || key < best_key ||
                               (key == best_key && canon.sequence < best->sequence)) {
                             best = std::move(canon);
                             best_key = std::move(key);
                           }
                           return true;
                         });
  return best;
}

std::optional<Cycle> hamiltonian_cycle_on(const Graph& g, const std::vector<VertexId>& members) {
  if (members.size() < 3) return std::nullopt;
  std::vector<VertexId> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("hamiltonian_cycle_on: duplicate member");
  }
  Graph induced = induced_subgraph(g, sorted);
  const auto want = static_cast<std::int64_t>(sorted.size());
  std::optional<Cycle> best;
  for_each_cycle_through(induced, sorted.front(), want, -1,
                         [&](const std::vector<VertexId>& path) {
                           if (static_cast<std::int64_t>(path.size()) != want) return true;
                           Cycle canon = Cycle{path}.canonicalized();
                           if (!best || canon.sequence < best->sequence) best = std::move(canon);
                           return true;
                         });
  return best;
}

std::optional<ColorAssignment> color_with_lists(
    const Graph& g, const std::map<VertexId, std::vector<int>>& allowed) {
  std::vector<VertexId> order;
  order.reserve(allowed.size());
  int max_color = 0;
  for (const auto& [v, list] : allowed) {
    if (!g.has_vertex(v)) throw PreconditionError("list coloring: unknown vertex");
    order.push_back(v);
    for (int c : list) max_color = std::max(max_color, c);
  }
  ColorAssignment result;
  result.palette_size = max_color;

  auto feasible = [&](VertexId v, int color) {
    for (VertexId w : g.neighbors(v)) {
      if (result.color_of(w) == color) return false;
    }
    return true;
  };
  // Forward check: an uncolored vertex with no remaining feasible color makes
  // the current prefix hopeless.
  auto dead_end = [&](std::size_t from) {
    for (std::size_t i = from; i < order.size(); ++i) {
      bool any = false;
      for (int c : allowed.at(order[i])) {
        if (feasible(order[i], c)) {
          any = true;
          break;
        }
      }
      if (!any) return true;
    }
    return false;
  };
  auto solve = [&](auto&& self, std::size_t at) -> bool {
    if (at == order.size()) return true;
    VertexId v = order[at];
    for (int c : allowed.at(v)) {
      if (!feasible(v, c)) continue;
      result.set(v, c);
      if (!dead_end(at + 1) && self(self, at + 1)) return true;
      result.colors.erase(v);
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return result;
}

namespace {

bool graph_is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return static_cast<std::int64_t>(bfs_distances(g, g.vertices().front(), -1).size()) ==
         g.vertex_count();
}

bool graph_is_complete(const Graph& g) {
  const auto n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool graph_is_cycle(const Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 2) return false;
  }
  return graph_is_connected(g);
}

}  // namespace

ColorAssignment brooks_color(const Graph& h, int delta) {
  if (!graph_is_connected(h)) throw PreconditionError("brooks_color: graph is not connected");
  std::int64_t max_deg = 0;
  for (VertexId v : h.vertices()) max_deg = std::max(max_deg, h.degree(v));
  if (max_deg > delta) {
    throw PreconditionError("brooks_color: max degree exceeds the color budget");
  }
  if (graph_is_complete(h) && h.vertex_count() == delta + 1) {
    throw PreconditionError("brooks_color: complete graph on delta + 1 vertices needs delta + 1 colors");
  }
  if (delta == 2 && h.vertex_count() % 2 == 1 && graph_is_cycle(h)) {
    throw PreconditionError("brooks_color: odd cycle needs 3 colors");
  }
  std::vector<int> palette(static_cast<std::size_t>(delta));
  for (int i = 0; i < delta; ++i) palette[static_cast<std::size_t>(i)] = i + 1;
  std::map<VertexId, std::vector<int>> allowed;
  for (VertexId v : h.vertices()) allowed[v] = palette;
  auto result = color_with_lists(h, allowed);
  if (!result) {
    throw InternalCheckError("brooks_color: no coloring found although preconditions hold");
  }
  result->palette_size = delta;
  return *result;
}

ColorAssignment extend_on_cycle(const Graph& g, const Cycle& c, const ColorAssignment& partial,
                                int delta) {
  validate_cycle(g, c);
  if (!is_removable(g, c).removable) {
    throw PreconditionError("extend_on_cycle: cycle is not removable");
  }
  if (cycle_degree(g, c) > delta) {
    throw PreconditionError("extend_on_cycle: color budget smaller than the cycle degree");
  }
  for (VertexId v : c.sequence) {
    if (partial.color_of(v) != 0) {
      throw PreconditionError("extend_on_cycle: cycle vertex " + std::to_string(v) +
                              " is already colored");
    }
  }
  {
    std::vector<VertexId> colored;
    for (const auto& [v, col] : partial.colors) colored.push_back(v);
    std::sort(colored.begin(), colored.end());
    for (VertexId v : colored) {
      int col = partial.color_of(v);
      if (col < 1 || col > delta) {
        throw PreconditionError("extend_on_cycle: color out of palette at vertex " +
                                std::to_string(v));
      }
    }
    ColorAssignment bounded = partial;
    bounded.palette_size = delta;
    ProperReport rep = is_proper(g, bounded, false);
    if (!rep.proper) {
      throw PreconditionError("extend_on_cycle: partial coloring invalid: " + rep.describe());
    }
  }

  const auto& seq = c.sequence;
  const auto k = seq.size();
  // Colors of colored neighbors, per cycle vertex.
  std::vector<std::set<int>> col(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (VertexId w : g.neighbors(seq[i])) {
      if (int cw = partial.color_of(w); cw != 0) col[i].insert(cw);
    }
  }

  // A vertex whose constraint set is not inherited by its successor pins the
  // start of a greedy sweep.
  std::optional<std::size_t> pivot;
  int pivot_color = 0;
  for (std::size_t i = 0; i < k && !pivot; ++i) {
    const auto& succ = col[(i + 1) % k];
    for (int x : col[i]) {
      if (!succ.count(x)) {
        pivot = i;
        pivot_color = x;
        break;
      }
    }
  }

  ColorAssignment out = partial;
  out.palette_size = std::max(out.palette_size, delta);
  auto greedy_pick = [&](VertexId v) {
    std::set<int> used;
    for (VertexId w : g.neighbors(v)) {
      if (int cw = out.color_of(w); cw != 0) used.insert(cw);
    }
    for (int x = 1; x <= delta; ++x) {
      if (!used.count(x)) return x;
    }
    throw InternalCheckError("extend_on_cycle: no free color during the greedy sweep");
  };

  if (pivot) {
    // The pivot's successor takes the pinned color, then the sweep walks the
    // cycle and finishes at the pivot itself, which by then sees pivot_color
    // on two neighbors and so still has a spare color.
    out.set(seq[(*pivot + 1) % k], pivot_color);
    for (std::size_t off = 2; off <= k; ++off) {
      VertexId v = seq[(*pivot + off) % k];
      out.set(v, greedy_pick(v));
    }
    return out;
  }

  // All constraint sets are equal; color the induced graph with what is left.
  const auto& shared = col[0];
  std::vector<int> residual;
  for (int x = 1; x <= delta; ++x) {
    if (!shared.count(x)) residual.push_back(x);
  }
  Graph induced = induced_subgraph(g, c.canonical_key());
  ColorAssignment small = brooks_color(induced, static_cast<int>(residual.size()));
  for (VertexId v : c.canonical_key()) {
    out.set(v, residual[static_cast<std::size_t>(small.color_of(v)) - 1]);
  }
  return out;
}

}  // namespace plancol

#include "plancol/lowerbound.hpp"

#include <algorithm>
#include <set>

#include "plancol/errors.hpp"

namespace plancol {

VertexId GadgetBuild::id(const std::string& name) const {
  auto it = names.find(name);
  if (it == names.end()) throw InputError("unknown gadget vertex " + name);
  return it->second;
}

namespace {

std::string nm(char role, std::int64_t i, std::int64_t j) {
  return std::string(1, role) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string nm(char role, std::int64_t i) {
  return std::string(1, role) + "(" + std::to_string(i) + ")";
}

}  // namespace

GadgetBuild build_gadget(GadgetSpec spec) {
  if (spec.k < 0) throw InputError("gadget level count must be non-negative");
  GadgetBuild out;
  out.spec = spec;
  std::vector<VertexId> vertices;
  EdgeList edges;
  VertexId next = 1;
  auto add = [&](const std::string& name) {
    vertices.push_back(next);
    out.names[name] = next;
    return next++;
  };

  if (spec.family == GadgetFamily::planar4) {
    VertexId prev[3] = {0, add(nm('v', 0, 1)), add(nm('v', 0, 2))};
    edges.push_back({prev[1], prev[2]});
    for (std::int64_t i = 1; i <= spec.k; ++i) {
      for (std::int64_t j = 1; j <= 2; ++j) {
        VertexId a = add(nm('a', i, j));
        VertexId b = add(nm('b', i, j));
        VertexId c = add(nm('c', i, j));
        VertexId v = add(nm('v', i, j));
        edges.insert(edges.end(), {{a, b}, {b, c}, {a, c}});
        for (VertexId x : {a, b, c}) {
          edges.push_back({x, v});
          edges.push_back({x, prev[j]});
        }
        prev[j] = v;
      }
    }
  } else {
    VertexId pv = add(nm('v', 0));
    VertexId pu = add(nm('u', 0));
    edges.push_back({pv, pu});
    for (std::int64_t i = 1; i <= spec.k; ++i) {
      VertexId a = add(nm('a', i));
      VertexId b = add(nm('b', i));
      VertexId c = add(nm('c', i));
      VertexId d = add(nm('d', i));
      VertexId v = add(nm('v', i));
      VertexId u = add(nm('u', i));
      edges.insert(edges.end(), {{a, b},
                                 {c, d},
                                 {a, v},
                                 {b, v},
                                 {c, u},
                                 {d, u},
                                 {a, pv},
                                 {b, pv},
                                 {c, pu},
                                 {d, pu}});
      pv = v;
      pu = u;
    }
  }
  out.graph = Graph::from_edges(std::move(vertices), edges);
  return out;
}

ColoringEnumeration exact_colorings(const Graph& g, int palette, std::int64_t cap,
                                    const std::function<bool(const ColorAssignment&)>& visit) {
  if (palette < 1) throw InputError("palette must be positive");
  ColoringEnumeration result;
  const auto order = g.vertices();
  ColorAssignment current;
  current.palette_size = palette;

  auto feasible = [&](VertexId v, int color) {
    for (VertexId w : g.neighbors(v)) {
      if (current.color_of(w) == color) return false;
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t at) -> bool {
    if (at == order.size()) {
      if (result.count == cap) {
        result.complete = false;  // one more exists beyond the cap
        return false;
      }
      ++result.count;
      if (visit && !visit(current)) {
        result.complete = false;
        return false;
      }
      return true;
    }
    for (int c = 1; c <= palette; ++c) {
      if (!feasible(order[at], c)) continue;
      current.set(order[at], c);
      if (!self(self, at + 1)) return false;
      current.colors.erase(order[at]);
    }
    return true;
  };
  walk(walk, 0);
  return result;
}

bool forcing_holds(const Graph& g, int palette,
                   const std::vector<std::pair<VertexId, VertexId>>& pairs, std::int64_t cap) {
  bool forced = true;
  auto e = exact_colorings(g, palette, cap, [&](const ColorAssignment& c) {
    for (auto [a, b] : pairs) {
      if (c.color_of(a) != c.color_of(b)) {
        forced = false;
        return false;
      }
    }
    return true;
  });
  if (!forced) return false;
  if (!e.complete) {
    throw InputError("coloring enumeration exceeded the cap of " + std::to_string(cap));
  }
  if (e.count == 0) {
    throw InternalCheckError("gadget admits no proper coloring at all");
  }
  return true;
}

bool forcing_check(const GadgetSpec& spec) {
  const bool planar = spec.family == GadgetFamily::planar4;
  if (spec.k > (planar ? 3 : 4)) {
    throw InputError("forcing oracle is limited to k <= " + std::string(planar ? "3" : "4"));
  }
  GadgetBuild gb = build_gadget(spec);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (planar) {
    pairs = {{gb.id(nm('v', spec.k, 1)), gb.id(nm('v', 0, 1))},
             {gb.id(nm('v', spec.k, 2)), gb.id(nm('v', 0, 2))}};
  } else {
    pairs = {{gb.id(nm('v', spec.k)), gb.id(nm('v', 0))},
             {gb.id(nm('u', spec.k)), gb.id(nm('u', 0))}};
  }
  // Count bounds: 12 * 36^k and 6 * 4^k, both comfortably under the cap at
  // the allowed k.
  return forcing_holds(gb.graph, planar ? 4 : 3, pairs, 10'000'000);
}

bool distance_check(const GadgetSpec& spec) {
  GadgetBuild gb = build_gadget(spec);
  auto check = [&](VertexId from, VertexId to) {
    auto dist = bfs_distances(gb.graph, from, -1);
    auto it = dist.find(to);
    return it != dist.end() && it->second == 2 * spec.k;
  };
  if (spec.family == GadgetFamily::planar4) {
    return check(gb.id(nm('v', 0, 1)), gb.id(nm('v', spec.k, 1))) &&
           check(gb.id(nm('v', 0, 2)), gb.id(nm('v', spec.k, 2)));
  }
  return check(gb.id(nm('v', 0)), gb.id(nm('v', spec.k))) &&
         check(gb.id(nm('u', 0)), gb.id(nm('u', spec.k)));
}

bool separates(const Graph& g, VertexId cut, VertexId s, VertexId t) {
  if (s == cut || t == cut) throw InputError("cut vertex coincides with an endpoint");
  std::vector<VertexId> rest;
  for (VertexId v : g.vertices()) {
    if (v != cut) rest.push_back(v);
  }
  auto dist = bfs_distances(induced_subgraph(g, rest), s, -1);
  return !dist.count(t);
}

LocalRun ball_rank_coloring(const Graph& g, std::int64_t t, int palette) {
  // The collection flood sends in rounds 1..t only, so the run already
  // respects the horizon; the experiment re-checks that from the trace.
  auto rr = collect_ball(g, t);
  LocalRun out;
  out.trace = rr.trace;
  out.coloring.palette_size = palette;
  for (VertexId v : g.vertices()) {
    const auto& records = rr.state_of(v).records;
    std::int64_t rank = 0;
    for (const auto& [id, rec] : records) {
      if (id < v) ++rank;
    }
    out.coloring.set(v, static_cast<int>(1 + rank % palette));
  }
  return out;
}

LocalRun greedy_ball_coloring(const Graph& g, std::int64_t t, int palette) {
  auto rr = collect_ball(g, t);
  LocalRun out;
  out.trace = rr.trace;
  out.coloring.palette_size = palette;
  for (VertexId v : g.vertices()) {
    Graph local = ball_records_to_graph(rr.state_of(v).records);
    std::map<VertexId, int> greedy;
    for (VertexId u : local.vertices()) {
      std::set<int> used;
      for (VertexId w : local.neighbors(u)) {
        if (auto it = greedy.find(w); it != greedy.end()) used.insert(it->second);
      }
      int c = 1;
      while (used.count(c)) ++c;
      greedy[u] = c;
    }
    out.coloring.set(v, 1 + (greedy.at(v) - 1) % palette);
  }
  return out;
}

SwapVerdict swap_labeling_experiment(std::int64_t k, std::int64_t t,
                                     const LocalColoringAlg& alg) {
  if (t >= k) throw InputError("experiment needs t < k");
  if (t < 0) throw InputError("negative round horizon");
  GadgetBuild gb = build_gadget({GadgetFamily::planar4, k});
  const Graph& g = gb.graph;
  const VertexId top1 = gb.id(nm('v', k, 1)), top2 = gb.id(nm('v', k, 2));
  const VertexId base1 = gb.id(nm('v', 0, 1)), base2 = gb.id(nm('v', 0, 2));

  SwapVerdict verdict;
  auto b_top1 = ball(g, top1, t), b_top2 = ball(g, top2, t);
  auto b_base1 = ball(g, base1, t), b_base2 = ball(g, base2, t);
  auto meets = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return !common.empty();
  };
  verdict.balls_disjoint = !meets(b_top1, b_base1) && !meets(b_top1, b_base2) &&
                           !meets(b_top2, b_base1) && !meets(b_top2, b_base2);

  // Mirror permutation: inside the two top balls, swap each vertex with its
  // sibling in the other block. The construction names make the sibling
  // explicit; the two balls are mirror images, so this is a bijection.
  std::map<VertexId, std::string> name_of;
  for (const auto& [name, id] : gb.names) name_of[id] = name;
  std::set<VertexId> swapped(b_top1.begin(), b_top1.end());
  swapped.insert(b_top2.begin(), b_top2.end());
  auto sibling = [&](VertexId x) {
    std::string name = name_of.at(x);
    const auto comma = name.find(',');
    const char j = name[comma + 1];
    name[comma + 1] = (j == '1') ? '2' : '1';
    return gb.id(name);
  };
  auto pi = [&](VertexId x) { return swapped.count(x) ? sibling(x) : x; };
  for (VertexId x : swapped) {
    if (!swapped.count(sibling(x))) {
      throw InternalCheckError("mirror image of the swap region is not the region itself");
    }
  }

  EdgeList mirrored;
  for (auto [u, w] : g.edges()) mirrored.push_back({pi(u), pi(w)});
  Graph g2 = Graph::from_edges(g.vertices(), mirrored);

  auto check_rounds = [&](const RoundTrace& trace) {
    for (const auto& r : trace.per_round) {
      if (r.round > t && r.messages > 0) {
        throw InputError("algorithm sent messages in round " + std::to_string(r.round) +
                         ", past the horizon " + std::to_string(t));
      }
    }
  };

  LocalRun base = alg(g);
  check_rounds(base.trace);
  verdict.base_proper = is_proper(g, base.coloring, true).proper;
  verdict.base_forced = base.coloring.color_of(top1) == base.coloring.color_of(base1) &&
                        base.coloring.color_of(top2) == base.coloring.color_of(base2);

  LocalRun swapped_run = alg(g2);
  check_rounds(swapped_run.trace);
  verdict.swapped_proper = is_proper(g2, swapped_run.coloring, true).proper;
  // Forcing reads through the permutation: the vertex playing top j carries
  // the mirrored id.
  verdict.swapped_forced =
      swapped_run.coloring.color_of(pi(top1)) == swapped_run.coloring.color_of(pi(base1)) &&
      swapped_run.coloring.color_of(pi(top2)) == swapped_run.coloring.color_of(pi(base2));
  return verdict;
}

}  // namespace plancol

#include "plancol/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "plancol/errors.hpp"
#include "plancol/removable.hpp"

namespace plancol {

Charge ChargeLedger::total_charge() const {
  Charge sum{0};
  for (const auto& [v, c] : charges) sum += c;
  return sum;
}

Charge ChargeLedger::max_charge() const {
  Charge best{0};
  for (const auto& [v, c] : charges) best = std::max(best, c);
  return best;
}

std::vector<std::vector<VertexId>> enumerate_triangles(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  for (auto [u, v] : g.edges()) {
    for (VertexId w : g.neighbors(v)) {
      if (w > v && g.has_edge(u, w)) out.push_back({u, v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> enumerate_four_cliques(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& t : enumerate_triangles(g)) {
    for (VertexId w : g.neighbors(t[2])) {
      if (w > t[2] && g.has_edge(t[0], w) && g.has_edge(t[1], w)) {
        out.push_back({t[0], t[1], t[2], w});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> enumerate_cycles_upto(const Graph& g, std::int64_t max_len) {
  std::set<std::vector<VertexId>> seen;
  std::vector<Cycle> out;
  for (VertexId v : g.vertices()) {
    for_each_cycle_through(g, v, max_len, -1, [&](const std::vector<VertexId>& path) {
      Cycle c = Cycle{path}.canonicalized();
      if (seen.insert(c.sequence).second) out.push_back(std::move(c));
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    auto ka = a.canonical_key(), kb = b.canonical_key();
    return ka != kb ? ka < kb : a.sequence < b.sequence;
  });
  return out;
}

std::vector<Cycle> enumerate_five_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (Cycle& c : enumerate_cycles_upto(g, 5)) {
    if (c.length() == 5) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Edge> k4_break_edges(const Graph& g, std::vector<VertexId> quad) {
  if (quad.size() != 4) throw InputError("k4_break_edges expects four vertices");
  std::sort(quad.begin(), quad.end());
  if (std::adjacent_find(quad.begin(), quad.end()) != quad.end()) {
    throw InputError("k4_break_edges: repeated vertex");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!g.has_edge(quad[i], quad[j])) {
        throw InputError("k4_break_edges: vertices " + std::to_string(quad[i]) + " and " +
                         std::to_string(quad[j]) + " are not adjacent");
      }
    }
  }
  // (x, y, z, w) by id; removing x-y, y-z, z-w leaves the path z-x-w-y.
  return {{quad[0], quad[1]}, {quad[1], quad[2]}, {quad[2], quad[3]}};
}

namespace {

Edge ordered(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  const auto& s = c.sequence;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(ordered(s[i], s[(i + 1) % s.size()]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> clique_edges(const std::vector<VertexId>& members) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out.push_back(ordered(members[i], members[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool share_edge(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

struct Mutable {
  std::vector<VertexId> vertices;
  std::set<Edge> edges;

  Graph graph() const {
    return Graph::from_edges(vertices, EdgeList(edges.begin(), edges.end()));
  }
  void remove(const Edge& e) {
    if (edges.erase(e) != 1) {
      throw InternalCheckError("removal of absent edge " + std::to_string(e.first) + "-" +
                               std::to_string(e.second));
    }
  }
};

void record_event(ChargeLedger& ledger, Mutable& h, ChargeKind kind,
                  std::vector<VertexId> members, std::vector<Edge> removed,
                  const Charge& per_member) {
  for (const Edge& e : removed) {
    h.remove(e);
    ledger.removed.push_back(e);
  }
  for (VertexId v : members) ledger.charges[v] += per_member;
  ledger.events.push_back({kind, std::move(members), std::move(removed)});
  // Running invariant, kept exact in rational arithmetic with no tolerance.
  if (ledger.total_charge() != Charge(static_cast<long long>(ledger.removed.size()))) {
    throw InternalCheckError("charge sum diverged from the removal count");
  }
}

}  // namespace

ChargeResult charge_procedure(const Graph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 6) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + ", above 6");
    }
  }
  for (VertexId v : g.vertices()) {
    auto removable = enumerate_removable(g, 10, 6, v, 6);
    if (!removable.empty()) {
      std::ostringstream os;
      os << "removable cycle of length " << removable.front().length() << " through vertex "
         << v;
      throw PreconditionError(os.str());
    }
  }

  Mutable h{g.vertices(), {}};
  for (auto [u, v] : g.edges()) h.edges.insert({u, v});
  ChargeLedger ledger;
  for (VertexId v : g.vertices()) ledger.charges[v] = Charge{0};

  for (;;) {
    auto fives = enumerate_five_cycles(h.graph());
    if (fives.empty()) break;
    const Cycle& c = fives.front();
    auto edges = cycle_edges(c);
    record_event(ledger, h, ChargeKind::five_cycle, c.canonical_key(), {edges.front()},
                 Charge{1, 5});
  }
  for (;;) {
    auto quads = enumerate_four_cliques(h.graph());
    if (quads.empty()) break;
    auto members = quads.front();
    auto removed = k4_break_edges(h.graph(), members);
    record_event(ledger, h, ChargeKind::four_clique, std::move(members), std::move(removed),
                 Charge{3, 4});
  }
  for (;;) {
    auto triangles = enumerate_triangles(h.graph());
    if (triangles.empty()) break;
    auto members = triangles.front();
    record_event(ledger, h, ChargeKind::triangle, members,
                 {clique_edges(members).front()}, Charge{1, 3});
  }

  ChargeResult result{h.graph(), std::move(ledger)};
  for (VertexId v : result.reduced.vertices()) {
    if (auto c = shortest_cycle_through(result.reduced, v, 5)) {
      throw InternalCheckError("cycle of length " + std::to_string(c->length()) +
                               " survived the removals");
    }
  }
  const auto n = g.vertex_count();
  const auto removed = static_cast<std::int64_t>(result.ledger.removed.size());
  if (2 * removed > 3 * n) {
    throw InternalCheckError("removed " + std::to_string(removed) + " edges, above 1.5 * " +
                             std::to_string(n));
  }
  if (result.ledger.max_charge() > Charge{3, 2}) {
    throw InternalCheckError("a vertex charge exceeded 3/2");
  }
  // Certificate for the edge bound of the input: the reduced graph satisfies
  // the girth-7 planar bound (|E'| <= 1.4|V|), removals account for the rest.
  if (!check_edge_bound(result.reduced, 7)) {
    throw InternalCheckError("reduced graph broke the girth-7 edge bound");
  }
  if (g.edge_count() != removed + result.reduced.edge_count()) {
    throw InternalCheckError("edge accounting mismatch after the removals");
  }
  if (10 * g.edge_count() > 29 * n) {
    throw InternalCheckError("input had more than 2.9|V| edges despite the certificate");
  }
  return result;
}

DisjointnessReport disjointness_audit(const Graph& g) {
  DisjointnessReport report;
  auto short_cycles = enumerate_cycles_upto(g, 5);
  std::vector<const Cycle*> fives;
  for (const Cycle& c : short_cycles) {
    if (c.length() == 5) fives.push_back(&c);
  }
  auto quads = enumerate_four_cliques(g);
  auto triangles = enumerate_triangles(g);
  report.five_cycles = static_cast<std::int64_t>(fives.size());
  report.four_cliques = static_cast<std::int64_t>(quads.size());
  report.triangles = static_cast<std::int64_t>(triangles.size());

  auto describe = [](const std::vector<VertexId>& m) {
    std::string s = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m[i]);
    }
    return s + "}";
  };

  for (const Cycle* c5 : fives) {
    auto mine = cycle_edges(*c5);
    for (const Cycle& other : short_cycles) {
      if (other.sequence == c5->sequence) continue;
      if (share_edge(mine, cycle_edges(other))) {
        report.violations.push_back("5-cycle " + describe(c5->canonical_key()) +
                                    " shares an edge with cycle " +
                                    describe(other.canonical_key()));
      }
    }
  }
  for (std::size_t i = 0; i < quads.size(); ++i) {
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      if (share_edge(clique_edges(quads[i]), clique_edges(quads[j]))) {
        report.violations.push_back("4-cliques " + describe(quads[i]) + " and " +
                                    describe(quads[j]) + " share an edge");
      }
    }
  }
  for (const auto& t : triangles) {
    for (const auto& q : quads) {
      const bool inside = std::includes(q.begin(), q.end(), t.begin(), t.end());
      if (!inside && share_edge(clique_edges(t), clique_edges(q))) {
        report.violations.push_back("triangle " + describe(t) + " shares an edge with 4-clique " +
                                    describe(q) + " without lying inside it");
      }
    }
  }
  return report;
}

}  // namespace plancol

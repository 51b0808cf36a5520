#pragma once

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "plancol/graph.hpp"

namespace plancol {

using Charge = boost::rational<long long>;
using Edge = std::pair<VertexId, VertexId>;

// Bookkeeping of the edge removal procedure: charges are exact fractions and
// their sum must equal the number of removed edges after every event.

enum class ChargeKind { five_cycle, four_clique, triangle };

struct ChargeEvent {
  ChargeKind kind = ChargeKind::triangle;
  std::vector<VertexId> members;  // sorted
  std::vector<Edge> removed;      // edges removed by this event, u < v
};

struct ChargeLedger {
  std::map<VertexId, Charge> charges;
  std::vector<Edge> removed;
  std::vector<ChargeEvent> events;

  Charge total_charge() const;
  Charge max_charge() const;
};

struct ChargeResult {
  Graph reduced;
  ChargeLedger ledger;
};

// Enumeration helpers, canonical (sorted member sets, ascending).
std::vector<std::vector<VertexId>> enumerate_triangles(const Graph& g);
std::vector<std::vector<VertexId>> enumerate_four_cliques(const Graph& g);
std::vector<Cycle> enumerate_cycles_upto(const Graph& g, std::int64_t max_len);
std::vector<Cycle> enumerate_five_cycles(const Graph& g);

// The three edges whose removal turns a 4-clique into a path: with members
// sorted as (x, y, z, w), drop {x,y}, {y,z}, {z,w}; the remainder is the path
// z-x-w-y. InputError when the four vertices are not a clique in g.
std::vector<Edge> k4_break_edges(const Graph& g, std::vector<VertexId> quad);

// Edge removal with charges. Requires max degree <= 6 and no removable cycle
// of length <= 10 (PreconditionError otherwise). Removes one edge per
// 5-cycle (1/5 charge each member), three per 4-clique (3/4 each), one per
// triangle (1/3 each), processing structures in canonical order and
// re-enumerating after every removal. Verifies afterwards: no cycle of
// length <= 5 remains, at most 1.5|V| edges were removed, every charge is at
// most 3/2, and the reduced graph passes the girth-7 edge bound, which
// together certify |E| <= 2.9|V| for the input. Any failed check throws
// InternalCheckError.
ChargeResult charge_procedure(const Graph& g);

struct DisjointnessReport {
  std::int64_t five_cycles = 0;
  std::int64_t four_cliques = 0;
  std::int64_t triangles = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Checks the edge-disjointness structure the removal procedure relies on:
// 5-cycles share no edge with any other cycle of length at most 5, 4-cliques
// are pairwise edge-disjoint, and a triangle meeting a 4-clique in an edge
// lies inside it. Reports violations instead of throwing; on inputs
// satisfying the charge precondition the report is clean.
DisjointnessReport disjointness_audit(const Graph& g);

}  // namespace plancol

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plancol/errors.hpp"

namespace plancol {

using VertexId = std::int64_t;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Simple undirected graph over arbitrary positive vertex ids.
// Immutable once built; adjacency lists are kept sorted so that every
// traversal in the library is deterministic.
class Graph {
 public:
  Graph() = default;

  // `vertices` may contain ids not mentioned by any edge (isolated vertices).
  // Self loops are rejected, duplicate edges collapse.
  static Graph from_edges(std::vector<VertexId> vertices, const EdgeList& edges);

  std::int64_t vertex_count() const { return static_cast<std::int64_t>(ids_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<VertexId>& vertices() const { return ids_; }  // sorted
  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;

  // Sorted neighbor ids; throws InputError for unknown vertices.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[checked_index(v)]; }
  std::int64_t degree(VertexId v) const {
    return static_cast<std::int64_t>(neighbors(v).size());
  }

  // Dense index in [0, vertex_count), stable under the sorted id order.
  int index_of(VertexId v) const { return checked_index(v); }
  VertexId id_at(int index) const { return ids_.at(static_cast<std::size_t>(index)); }

  EdgeList edges() const;  // each pair with u < v, sorted

 private:
  int checked_index(VertexId v) const;

  std::vector<VertexId> ids_;
  std::vector<std::vector<VertexId>> adj_;
  std::unordered_map<VertexId, int> index_;
  std::int64_t edge_count_ = 0;
};

// A simple cycle given as its vertex sequence (closing edge implied).
struct Cycle {
  std::vector<VertexId> sequence;

  std::int64_t length() const { return static_cast<std::int64_t>(sequence.size()); }
  // Sorted member ids; this is the identity of the cycle wherever cycles are
  // compared or stored as keys.
  std::vector<VertexId> canonical_key() const;
  // Least rotation/reflection starting at the smallest member. Two traversals
  // of the same cycle canonicalize to the same sequence.
  Cycle canonicalized() const;
};

// Throws InputError unless c is a simple cycle of g (length >= 3, consecutive
// members adjacent, closing edge present, no repeats).
void validate_cycle(const Graph& g, const Cycle& c);

struct ColorAssignment {
  int palette_size = 0;
  std::unordered_map<VertexId, int> colors;  // values in {1..palette_size}; absent = uncolored

  int color_of(VertexId v) const {
    auto it = colors.find(v);
    return it == colors.end() ? 0 : it->second;
  }
  void set(VertexId v, int color) { colors[v] = color; }
};

struct ProperReport {
  bool proper = true;
  // Exactly one witness is populated when proper == false.
  std::optional<std::pair<VertexId, VertexId>> conflict_edge;  // same color endpoints
  std::optional<VertexId> uncolored_vertex;
  std::optional<VertexId> out_of_palette_vertex;

  std::string describe() const;
};

// Checks palette bounds on every assigned color, monochromatic edges, and
// (when require_total) that every vertex is colored. Witness choice is
// deterministic: the first offender in sorted vertex/edge order.
ProperReport is_proper(const Graph& g, const ColorAssignment& coloring, bool require_total);

// Sorted vertex ids at hop distance <= radius from center.
std::vector<VertexId> ball(const Graph& g, VertexId center, std::int64_t radius);

// Hop distances from center, capped at `cap` (vertices farther than cap are
// absent). cap < 0 means unbounded.
std::unordered_map<VertexId, std::int64_t> bfs_distances(const Graph& g, VertexId center,
                                                         std::int64_t cap);

// Induced subgraph on `members` (all must exist in g).
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& members);

// Shortest simple cycle through v of length <= max_len, if any. Deterministic:
// among shortest candidates the one with the least canonical sequence wins.
std::optional<Cycle> shortest_cycle_through(const Graph& g, VertexId v, std::int64_t max_len);

// Edge bound for planar graphs without short cycles: if g has no simple cycle
// of length < girth_lower (checked; PreconditionError names an offending
// cycle), then returns whether |E| <= girth_lower/(girth_lower-2) * |V|.
bool check_edge_bound(const Graph& g, std::int64_t girth_lower);

}  // namespace plancol

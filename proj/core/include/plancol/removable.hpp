#pragma once

#include <functional>
#include <map>
#include <optional>

#include "plancol/graph.hpp"

namespace plancol {

// Degree of a cycle: the largest degree in g among its vertices.
std::int64_t cycle_degree(const Graph& g, const Cycle& c);

// A cycle can absorb a coloring extension (see extend_on_cycle) unless the
// induced graph on its vertex set is a complete graph or an odd cycle graph.
struct RemovabilityVerdict {
  enum class Reason { even_or_chorded_ok, complete, odd_cycle_graph };
  bool removable = false;
  Reason reason = Reason::even_or_chorded_ok;
};

RemovabilityVerdict is_removable(const Graph& g, const Cycle& c);

// Visits every simple cycle through `anchor` of length <= max_len once, in a
// deterministic order. When deg_threshold >= 0 only vertices whose degree in
// h is <= deg_threshold may appear on the cycle. The visited sequence starts
// at `anchor`; return false from the callback to stop early.
void for_each_cycle_through(const Graph& h, VertexId anchor, std::int64_t max_len,
                            std::int64_t deg_threshold,
                            const std::function<bool(const std::vector<VertexId>&)>& visit);

// All simple cycles through `anchor` in h of length <= max_len subject to the
// same degree restriction, canonicalized and sorted. For small inputs.
std::vector<Cycle> cycles_through(const Graph& h, VertexId anchor, std::int64_t max_len,
                                  std::int64_t deg_threshold = -1);

// Removable cycles through `through` inside the radius ball around it, with
// length <= max_len and degree (measured in the ball subgraph) <= max_deg,
// sorted by (sorted vertex set, canonical sequence). Requires
// radius >= max_len/2 + 1, which makes ball degrees of candidate cycle
// vertices agree with their g degrees.
std::vector<Cycle> enumerate_removable(const Graph& g, std::int64_t max_len, std::int64_t max_deg,
                                       VertexId through, std::int64_t radius);

// The removable cycle through `anchor` minimizing (sorted vertex set,
// canonical sequence), or nullopt. This is the selection rule every vertex
// applies locally, so ties break identically everywhere.
std::optional<Cycle> best_removable_cycle(const Graph& h, VertexId anchor, std::int64_t max_len,
                                          std::int64_t deg_threshold);

// The Hamiltonian cycle of the induced graph on `members` with the smallest
// canonical sequence, or nullopt when none exists. Whether a vertex set was
// stored as a cycle key never depends on which Hamiltonian cycle witnessed
// it, so any agreed-on recovery rule works; smallest-canonical keeps every
// party's choice identical.
std::optional<Cycle> hamiltonian_cycle_on(const Graph& g, const std::vector<VertexId>& members);

// Exact list coloring by backtracking with forward pruning. Vertices are
// processed in id order and colors in list order, so the result is a
// deterministic function of the input. Exponential in the worst case; callers
// only hand it graphs with a dozen or so vertices.
std::optional<ColorAssignment> color_with_lists(
    const Graph& g, const std::map<VertexId, std::vector<int>>& allowed);

// Proper coloring of a connected graph with colors {1..delta}. Exists when
// max degree <= delta, except for two families needing one extra color:
// complete graphs on delta + 1 vertices and, at delta = 2, odd cycles.
// Violated preconditions throw PreconditionError naming the offending case.
ColorAssignment brooks_color(const Graph& h, int delta);

// Extends a partial proper coloring of g to the vertices of a removable cycle
// c, with colors {1..delta}. Preconditions (checked): c is a removable cycle
// of g, cycle_degree(g, c) <= delta, `partial` uses only {1..delta}, is
// proper on g and leaves every cycle vertex uncolored. Returns `partial` plus
// colors for exactly V(C). Deterministic in the given cycle orientation:
// either some vertex sees a color its cyclic successor does not (the first
// such vertex and smallest such color seed a greedy sweep around the cycle),
// or every vertex sees the same color set and the induced graph on V(C) is
// colored from the leftover palette.
ColorAssignment extend_on_cycle(const Graph& g, const Cycle& c, const ColorAssignment& partial,
                                int delta);

}  // namespace plancol

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "plancol/engine.hpp"
#include "plancol/graph.hpp"
#include "plancol/partition.hpp"

namespace plancol {

// One layer of the contracted graph: nodes are the distinct cycle keys stored
// by phase-1 vertices of a level, and two keys are adjacent when one has a
// member next to (or equal to) a member of the other. Offline oracle; the
// message protocol in assign_phi must agree with it.
struct SuperGraph {
  std::vector<std::vector<VertexId>> nodes;  // sorted member lists, sorted
  std::vector<std::pair<int, int>> edges;    // index pairs, first < second
  std::vector<std::string> node_ids;         // fixed width decimal member concat
  std::vector<VertexId> reps;                // largest member simulates the node

  std::vector<std::int64_t> degrees() const;
  std::int64_t max_degree() const;
};

SuperGraph build_super_graph(const Graph& g, std::int64_t level,
                             const std::unordered_map<VertexId, Label>& labels,
                             const std::unordered_map<VertexId, std::vector<VertexId>>& keys);

// Priority used by the greedy node coloring; a deterministic hash of the
// level and the member list. Ties across distinct keys are broken by the
// member lists themselves, so comparisons are on (priority, members).
std::uint64_t super_priority(std::int64_t level, const std::vector<VertexId>& members);

struct PhiResult {
  std::unordered_map<VertexId, int> phi;
  RoundTrace trace;
};

// Second labeling pass: every phase-2 vertex reduces its id to a color in
// {1..phase2_colors} within its level class, and every phase-1 vertex takes
// the color its key receives in the greedy node coloring of its level, in
// {1..super_palette}. Runs as a single message program; all levels proceed in
// parallel, so the busy round count does not scale with the level count.
// Validates its own output (properness per class, palette and degree bounds)
// before returning.
PhiResult assign_phi(const Graph& g, const std::unordered_map<VertexId, Label>& labels,
                     const std::unordered_map<VertexId, std::vector<VertexId>>& keys,
                     const PartitionParams& params, EngineOptions options = {});

}  // namespace plancol

#pragma once

#include <unordered_map>
#include <vector>

#include "plancol/engine.hpp"
#include "plancol/graph.hpp"
#include "plancol/partition.hpp"

namespace plancol {

struct FinalResult {
  ColorAssignment coloring;
  RoundTrace trace;
};

// Third pass: turns the labeling and the color classes into a proper coloring
// with params.palette colors. Every vertex floods one record (label, class,
// key, neighbor list) to distance span + 1, adopts the best same-label pair
// covering it, and then acts in its class slot: low degree classes pick the
// smallest free color, cycle classes extend the surrounding partial coloring
// over their stored cycle. Slots walk levels downward, so everything above a
// vertex is colored before it acts; empty slots cost no busy rounds.
FinalResult run_final_color(const Graph& g, const std::unordered_map<VertexId, Label>& labels,
                            const std::unordered_map<VertexId, std::vector<VertexId>>& keys,
                            const std::unordered_map<VertexId, int>& phi,
                            const PartitionParams& params, EngineOptions options = {});

}  // namespace plancol

#pragma once

#include "plancol/final_color.hpp"
#include "plancol/graph.hpp"
#include "plancol/partition.hpp"
#include "plancol/sync_color.hpp"

namespace plancol {

// The two supported regimes: 4 colors on triangle free planar inputs,
// 6 colors on arbitrary planar inputs.
enum class Preset { four_col, six_col };

PartitionParams preset_params(Preset preset, std::int64_t n);

struct PipelineResult {
  PartitionParams params;
  PartitionResult partition;
  PhiResult phi;
  FinalResult final_pass;
  ColorAssignment coloring;  // copy of final_pass.coloring for convenience

  std::vector<std::pair<std::int64_t, std::int64_t>> shrink;  // (|A|, |B|) per iteration
  double worst_shrink = 0.0;        // max |B|/|A| over iterations with |A| > 0
  std::int64_t super_degree_max = 0;
  std::int64_t levels = 0;
  std::int64_t busy_rounds = 0;     // across all three passes
  std::int64_t total_messages = 0;
};

// Full run: partition into labeled layers, synchronize color classes, produce
// the final proper coloring. Self-checks every stage and the end result; any
// violated invariant throws InternalCheckError.
PipelineResult run_pipeline(const Graph& g, const PartitionParams& params,
                            EngineOptions options = {});
PipelineResult run_pipeline(const Graph& g, Preset preset, EngineOptions options = {});

}  // namespace plancol

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "plancol/engine.hpp"
#include "plancol/graph.hpp"

namespace plancol {

// Iterative peeling of the graph into labeled layers. Each iteration first
// labels every active vertex that lies on a short removable cycle whose
// members all have low active degree (phase 1, recording the cycle's vertex
// set as the key), then labels every remaining active vertex whose active
// degree dropped below the threshold (phase 2, key = own id).

struct PartitionParams {
  std::int64_t cycle_len_max = 0;
  std::int64_t deg_threshold = 0;
  std::int64_t collect_radius = 0;
  std::int64_t iterations = 0;
  int palette = 0;             // final palette carried to downstream stages
  int phase2_colors = 0;       // deg_threshold + 1
  std::int64_t super_palette = 0;  // bound on synchronization colors for keys

  // Radius covering a whole cycle from any of its members.
  std::int64_t span() const { return cycle_len_max / 2; }
};

std::int64_t ceil_log2(std::int64_t n);

// Presets: (4, 4, 3, 1 + 70*ceil(log2 n)) and (10, 6, 6, 1 + 700*ceil(log2 n)).
PartitionParams partition_params_4col(std::int64_t n);
PartitionParams partition_params_6col(std::int64_t n);

struct Label {
  std::int64_t level = 0;  // 0 = still active
  int phase = 0;           // 1 or 2 once labeled

  bool labeled() const { return level != 0; }
  bool operator==(const Label&) const = default;
};

struct PartitionProgram {
  PartitionParams params;

  struct State {
    Label label;
    std::vector<VertexId> key;
    // Activity of each neighbor as last announced; stale entries only ever
    // overstate activity, which is safe because labels are monotone.
    std::set<VertexId> active_neighbors;
    // Flood buffer for the current iteration: id -> full neighbor list.
    std::map<VertexId, std::vector<VertexId>> heard;
    std::int64_t iteration = 0;
  };

  State init(const VertexContext& ctx) const;
  void step(const VertexContext& ctx, std::int64_t round, State& state,
            std::span<const InboundMessage> inbox, StepIo& io) const;

  // Iteration i occupies rounds base(i) .. base(i)+period-1.
  std::int64_t period() const { return params.collect_radius + 2; }
  std::int64_t base(std::int64_t iteration) const { return 1 + (iteration - 1) * period(); }
};

struct PartitionResult {
  std::unordered_map<VertexId, Label> labels;
  std::unordered_map<VertexId, std::vector<VertexId>> keys;  // phase-1 cycles, sorted ids
  RoundTrace trace;
  std::int64_t max_level = 0;

  Label label_of(VertexId v) const { return labels.at(v); }
};

// Runs the program to completion. A vertex left active after the iteration
// budget is an internal failure (the contraction argument forbids it).
PartitionResult run_partition(const Graph& g, const PartitionParams& params,
                              EngineOptions options = {});

// Per-iteration active set sizes (|A_i| before, |B_i| after), derived from the
// final labels; the list stops once the active set is empty.
std::vector<std::pair<std::int64_t, std::int64_t>> shrink_profile(const PartitionResult& result,
                                                                  std::int64_t n);

// shrink_profile of a fresh run on g.
std::vector<std::pair<std::int64_t, std::int64_t>> shrinkage_audit(const Graph& g,
                                                                   const PartitionParams& params);

// Offline re-check of key validity: every phase-1 key must form a cycle that
// is removable with bounded degree in the induced subgraph of vertices with
// level >= the key's level. Throws on violation.
void audit_keys(const Graph& g, const PartitionResult& result, const PartitionParams& params);

// Repeatedly deletes every vertex lying on a removable cycle of length at most
// cycle_len_max (degree threshold ignored when <= 0) until none remains;
// returns the residual induced subgraph. Offline analogue of one phase-1 layer
// run to fixpoint, used to manufacture inputs free of short removable cycles.
Graph partition_step1_residual(const Graph& g, std::int64_t cycle_len_max,
                               std::int64_t deg_threshold = 0);

}  // namespace plancol

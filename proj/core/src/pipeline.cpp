#include "plancol/pipeline.hpp"

#include <algorithm>

#include "plancol/errors.hpp"

namespace plancol {

PartitionParams preset_params(Preset preset, std::int64_t n) {
  return preset == Preset::four_col ? partition_params_4col(n) : partition_params_6col(n);
}

PipelineResult run_pipeline(const Graph& g, const PartitionParams& params,
                            EngineOptions options) {
  PipelineResult out;
  out.params = params;
  if (g.vertex_count() == 0) return out;

  out.partition = run_partition(g, params, options);
  audit_keys(g, out.partition, params);
  out.levels = out.partition.max_level;
  out.shrink = shrink_profile(out.partition, g.vertex_count());
  for (auto [a, b] : out.shrink) {
    if (a > 0) {
      out.worst_shrink =
          std::max(out.worst_shrink, static_cast<double>(b) / static_cast<double>(a));
    }
  }
  for (std::int64_t level = 1; level <= out.levels; ++level) {
    out.super_degree_max =
        std::max(out.super_degree_max,
                 build_super_graph(g, level, out.partition.labels, out.partition.keys)
                     .max_degree());
  }

  out.phi = assign_phi(g, out.partition.labels, out.partition.keys, params, options);
  out.final_pass =
      run_final_color(g, out.partition.labels, out.partition.keys, out.phi.phi, params, options);
  out.coloring = out.final_pass.coloring;

  ProperReport report = is_proper(g, out.coloring, true);
  if (!report.proper) {
    throw InternalCheckError("pipeline produced a bad coloring: " + report.describe());
  }
  out.busy_rounds = out.partition.trace.rounds_used() + out.phi.trace.rounds_used() +
                    out.final_pass.trace.rounds_used();
  out.total_messages = out.partition.trace.total_messages() + out.phi.trace.total_messages() +
                       out.final_pass.trace.total_messages();
  return out;
}

PipelineResult run_pipeline(const Graph& g, Preset preset, EngineOptions options) {
  return run_pipeline(g, preset_params(preset, std::max<std::int64_t>(g.vertex_count(), 2)),
                      options);
}

}  // namespace plancol

#include "plancol/partition.hpp"

#include <algorithm>

#include "plancol/errors.hpp"
#include "plancol/removable.hpp"

namespace plancol {

std::int64_t ceil_log2(std::int64_t n) {
  if (n < 1) throw PreconditionError("ceil_log2 needs a positive argument");
  std::int64_t bits = 0;
  while ((std::int64_t{1} << bits) < n) ++bits;
  return bits;
}

PartitionParams partition_params_4col(std::int64_t n) {
  PartitionParams p;
  p.cycle_len_max = 4;
  p.deg_threshold = 4;
  p.collect_radius = 3;
  p.iterations = 1 + 70 * ceil_log2(std::max<std::int64_t>(n, 2));
  p.palette = 4;
  p.phase2_colors = 5;
  p.super_palette = 4 * 4 * 4 * 4 * 4;
  return p;
}

PartitionParams partition_params_6col(std::int64_t n) {
  PartitionParams p;
  p.cycle_len_max = 10;
  p.deg_threshold = 6;
  p.collect_radius = 6;
  p.iterations = 1 + 700 * ceil_log2(std::max<std::int64_t>(n, 2));
  p.palette = 6;
  p.phase2_colors = 7;
  std::int64_t sp = 1;
  for (int e = 0; e < 11; ++e) sp *= 6;
  p.super_palette = sp;
  return p;
}

namespace {

constexpr std::int64_t kRecordBatch = 1;  // [tag, iter, count, (ttl, origin, n, nbrs...)...]
constexpr std::int64_t kLabeled = 2;      // [tag, phase]

struct ParsedRecord {
  std::int64_t ttl = 0;
  VertexId origin = 0;
  std::vector<VertexId> nbrs;
};

std::vector<ParsedRecord> parse_batch(const Message& m) {
  std::vector<ParsedRecord> out;
  std::size_t pos = 3;
  const std::int64_t count = m[2];
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t r = 0; r < count; ++r) {
    ParsedRecord rec;
    rec.ttl = m[pos++];
    rec.origin = m[pos++];
    const std::int64_t n = m[pos++];
    rec.nbrs.assign(m.begin() + static_cast<std::ptrdiff_t>(pos),
                    m.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(n)));
    pos += static_cast<std::size_t>(n);
    out.push_back(std::move(rec));
  }
  return out;
}

void append_record(Message& m, std::int64_t ttl, VertexId origin,
                   const std::vector<VertexId>& nbrs) {
  m.push_back(ttl);
  m.push_back(origin);
  m.push_back(static_cast<std::int64_t>(nbrs.size()));
  m.insert(m.end(), nbrs.begin(), nbrs.end());
}

Graph graph_from_heard(const std::map<VertexId, std::vector<VertexId>>& heard) {
  std::vector<VertexId> vertices;
  vertices.reserve(heard.size());
  for (const auto& [v, nbrs] : heard) vertices.push_back(v);
  EdgeList edges;
  for (const auto& [v, nbrs] : heard) {
    for (VertexId w : nbrs) {
      if (v < w && heard.count(w)) edges.push_back({v, w});
    }
  }
  return Graph::from_edges(vertices, edges);
}

}  // namespace

PartitionProgram::State PartitionProgram::init(const VertexContext& ctx) const {
  State st;
  st.active_neighbors.insert(ctx.neighbors.begin(), ctx.neighbors.end());
  return st;
}

void PartitionProgram::step(const VertexContext& ctx, std::int64_t round, State& st,
                            std::span<const InboundMessage> inbox, StepIo& io) const {
  const std::int64_t R = params.collect_radius;
  Message forward = {kRecordBatch, 0, 0};  // iter and count patched before send
  std::int64_t forward_count = 0;
  for (const auto& m : inbox) {
    if (m.payload[0] == kLabeled) {
      st.active_neighbors.erase(m.from);
      continue;
    }
    const std::int64_t iter = m.payload[1];
    if (iter > st.iteration) {
      st.iteration = iter;
      st.heard.clear();
    } else if (iter < st.iteration) {
      continue;  // stale flood tail
    }
    for (auto& rec : parse_batch(m.payload)) {
      if (st.heard.count(rec.origin)) continue;
      if (rec.ttl > 0) {
        append_record(forward, rec.ttl - 1, rec.origin, rec.nbrs);
        ++forward_count;
      }
      st.heard.emplace(rec.origin, std::move(rec.nbrs));
    }
  }
  if (forward_count > 0) {
    forward[1] = st.iteration;
    forward[2] = forward_count;
    io.broadcast(forward);
  }
  if (st.label.labeled()) return;  // labeled vertices only relay and listen

  const std::int64_t iter_of_round = (round - 1) / period() + 1;
  const std::int64_t offset = round - base(iter_of_round);
  if (offset == 0) {
    // Iteration start: announce own record into the active flood.
    if (iter_of_round > params.iterations) return;
    st.iteration = iter_of_round;
    st.heard.clear();
    std::vector<VertexId> nbrs(ctx.neighbors.begin(), ctx.neighbors.end());
    Message batch = {kRecordBatch, st.iteration, 1};
    append_record(batch, R - 1, ctx.id, nbrs);
    io.broadcast(batch);
    st.heard.emplace(ctx.id, std::move(nbrs));
    io.wake_at(round + R);
    return;
  }
  if (offset == R && st.iteration == iter_of_round) {
    // Step 1: label if some removable short cycle through us survives in the
    // collected active subgraph with everyone's active degree in bounds.
    Graph h = graph_from_heard(st.heard);
    if (auto cyc = best_removable_cycle(h, ctx.id, params.cycle_len_max, params.deg_threshold)) {
      st.label = {iter_of_round, 1};
      st.key = cyc->canonical_key();
      io.broadcast({kLabeled, 1});
      return;
    }
    io.wake_at(round + 1);
    return;
  }
  if (offset == R + 1 && st.iteration == iter_of_round) {
    // Step 2: low active degree after step-1 removals.
    if (static_cast<std::int64_t>(st.active_neighbors.size()) < params.deg_threshold) {
      st.label = {iter_of_round, 2};
      st.key = {ctx.id};
      io.broadcast({kLabeled, 2});
      return;
    }
    if (iter_of_round < params.iterations) io.wake_at(base(iter_of_round + 1));
    return;
  }
}

PartitionResult run_partition(const Graph& g, const PartitionParams& params,
                              EngineOptions options) {
  PartitionProgram program{params};
  auto run_result = run(g, program, options);

  PartitionResult out;
  out.trace = std::move(run_result.trace);
  std::vector<VertexId> unlabeled;
  for (VertexId v : g.vertices()) {
    const auto& st = run_result.state_of(v);
    if (!st.label.labeled()) {
      unlabeled.push_back(v);
      continue;
    }
    out.labels[v] = st.label;
    out.keys[v] = st.key;
    out.max_level = std::max(out.max_level, st.label.level);
  }
  if (!unlabeled.empty()) {
    std::string msg = "vertices still active after " + std::to_string(params.iterations) +
                      " iterations (contradicts the contraction bound):";
    for (std::size_t i = 0; i < unlabeled.size() && i < 8; ++i) {
      msg += " " + std::to_string(unlabeled[i]);
    }
    if (unlabeled.size() > 8) msg += " ...";
    throw InternalCheckError(msg);
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> shrink_profile(const PartitionResult& result,
                                                                  std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> audit;
  std::vector<std::int64_t> labeled_at(static_cast<std::size_t>(result.max_level) + 1, 0);
  for (const auto& [v, label] : result.labels) {
    ++labeled_at[static_cast<std::size_t>(label.level)];
  }
  std::int64_t active = n;
  for (std::int64_t i = 1; i <= result.max_level && active > 0; ++i) {
    const std::int64_t after = active - labeled_at[static_cast<std::size_t>(i)];
    audit.push_back({active, after});
    active = after;
  }
  return audit;
}

std::vector<std::pair<std::int64_t, std::int64_t>> shrinkage_audit(
    const Graph& g, const PartitionParams& params) {
  if (g.vertex_count() == 0) return {};
  return shrink_profile(run_partition(g, params), g.vertex_count());
}

void audit_keys(const Graph& g, const PartitionResult& result, const PartitionParams& params) {
  // Group phase-1 keys by level; one induced ambient per level.
  std::map<std::int64_t, std::vector<VertexId>> phase1_by_level;
  for (const auto& [v, label] : result.labels) {
    if (label.phase == 1) phase1_by_level[label.level].push_back(v);
  }
  for (const auto& [level, members] : phase1_by_level) {
    std::vector<VertexId> ambient;
    for (const auto& [v, label] : result.labels) {
      if (label.level >= level) ambient.push_back(v);
    }
    std::sort(ambient.begin(), ambient.end());
    Graph h = induced_subgraph(g, ambient);
    for (VertexId v : members) {
      const auto& key = result.keys.at(v);
      if (std::find(key.begin(), key.end(), v) == key.end()) {
        throw InternalCheckError("key of vertex " + std::to_string(v) + " misses its owner");
      }
      for (VertexId u : key) {
        const Label lu = result.labels.at(u);
        if (lu.level != level || lu.phase != 1) {
          throw InternalCheckError("key member " + std::to_string(u) +
                                   " has a different label than owner " + std::to_string(v));
        }
        if (h.degree(u) > params.deg_threshold) {
          throw InternalCheckError("key member " + std::to_string(u) +
                                   " exceeded the degree bound in its ambient layer");
        }
      }
      auto cyc = hamiltonian_cycle_on(h, key);
      if (!cyc) {
        throw InternalCheckError("key of vertex " + std::to_string(v) +
                                 " does not span a cycle in its ambient layer");
      }
      if (!is_removable(h, *cyc).removable) {
        throw InternalCheckError("key of vertex " + std::to_string(v) + " is not removable");
      }
    }
  }
}

Graph partition_step1_residual(const Graph& g, std::int64_t cycle_len_max,
                               std::int64_t deg_threshold) {
  const std::int64_t threshold =
      deg_threshold > 0 ? deg_threshold : std::max<std::int64_t>(g.vertex_count(), 1);
  std::vector<VertexId> active = g.vertices();
  Graph h = induced_subgraph(g, active);
  for (;;) {
    std::vector<VertexId> keep;
    for (VertexId v : active) {
      if (!best_removable_cycle(h, v, cycle_len_max, threshold)) keep.push_back(v);
    }
    if (keep.size() == active.size()) return h;
    active = std::move(keep);
    h = induced_subgraph(g, active);
  }
}

}  // namespace plancol

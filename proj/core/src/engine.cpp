#include "plancol/engine.hpp"

namespace plancol {

namespace {

// Record wire format: id, label, ttl, degree, then the neighbor ids.
void pack_record(Message& out, VertexId id, const BallRecord& rec, std::int64_t ttl) {
  out.push_back(id);
  out.push_back(rec.label);
  out.push_back(ttl);
  out.push_back(static_cast<std::int64_t>(rec.neighbors.size()));
  out.insert(out.end(), rec.neighbors.begin(), rec.neighbors.end());
}

}  // namespace

CollectBallProgram::State CollectBallProgram::init(const VertexContext& ctx) const {
  State s;
  auto it = labels.find(ctx.id);
  BallRecord own;
  own.label = (it == labels.end()) ? ctx.id : it->second;
  own.neighbors.assign(ctx.neighbors.begin(), ctx.neighbors.end());
  s.records.emplace(ctx.id, std::move(own));
  return s;
}

void CollectBallProgram::step(const VertexContext& ctx, std::int64_t, State& state,
                              std::span<const InboundMessage> inbox, StepIo& io) const {
  Message forward;
  for (const auto& msg : inbox) {
    const auto& p = msg.payload;
    std::size_t pos = 0;
    while (pos < p.size()) {
      VertexId id = p[pos];
      std::int64_t label = p[pos + 1];
      std::int64_t ttl = p[pos + 2];
      std::int64_t deg = p[pos + 3];
      auto nb_begin = p.begin() + static_cast<std::ptrdiff_t>(pos + 4);
      pos += 4 + static_cast<std::size_t>(deg);
      if (state.records.count(id)) continue;  // seen via another path already
      BallRecord rec;
      rec.label = label;
      rec.neighbors.assign(nb_begin, nb_begin + deg);
      state.records.emplace(id, std::move(rec));
      if (ttl > 0) pack_record(forward, id, state.records.at(id), ttl - 1);
    }
  }
  // First step doubles as the announcement of the vertex's own record.
  if (!state.announced) {
    state.announced = true;
    if (radius >= 1) {
      Message own;
      pack_record(own, ctx.id, state.records.at(ctx.id), radius - 1);
      io.broadcast(own);
    }
  }
  if (!forward.empty()) io.broadcast(forward);
}

RunResult<CollectBallProgram> collect_ball(const Graph& g, std::int64_t radius,
                                           const std::unordered_map<VertexId, std::int64_t>& labels,
                                           EngineOptions options) {
  CollectBallProgram program{radius, labels};
  return run(g, program, options);
}

Graph ball_records_to_graph(const std::map<VertexId, BallRecord>& records) {
  std::vector<VertexId> vertices;
  vertices.reserve(records.size());
  for (const auto& [id, rec] : records) vertices.push_back(id);
  EdgeList edges;
  for (const auto& [id, rec] : records) {
    for (VertexId w : rec.neighbors) {
      if (id < w && records.count(w)) edges.push_back({id, w});
    }
  }
  return Graph::from_edges(vertices, edges);
}

}  // namespace plancol

#include "plancol/final_color.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "plancol/errors.hpp"
#include "plancol/removable.hpp"

namespace plancol {

namespace {

constexpr std::int64_t kInfo = 1;   // [tag, ttl, id, level, phase, class, klen, key..., n, nbrs...]
constexpr std::int64_t kColor = 2;  // [tag, ttl, id, color]

struct InfoRecord {
  Label label;
  int phi = 0;
  std::vector<VertexId> key;
  std::vector<VertexId> nbrs;
};

struct FinalProgram {
  PartitionParams params;
  const std::unordered_map<VertexId, Label>* labels = nullptr;
  const std::unordered_map<VertexId, std::vector<VertexId>>* keys = nullptr;
  const std::unordered_map<VertexId, int>* phi = nullptr;

  // Records travel to distance reach(); that covers the adopted key (a cycle
  // through the adopter, members within span) plus the members' neighbors.
  std::int64_t reach() const { return params.span() + 1; }
  std::int64_t adopt_round() const { return reach() + 2; }
  std::int64_t slot_round(std::int64_t idx) const {
    return reach() + 3 + idx * (reach() + 1);
  }
  // Slot index: levels descend from the iteration bound, low degree classes
  // first inside a level, then cycle classes.
  std::int64_t slot_index(std::int64_t level, int phase, int cls) const {
    const std::int64_t block = params.phase2_colors + params.super_palette;
    std::int64_t idx = (params.iterations - level) * block + (cls - 1);
    if (phase == 1) idx += params.phase2_colors;
    return idx;
  }

  struct State {
    Label label;
    std::vector<VertexId> key;
    int phi = 0;
    std::map<VertexId, InfoRecord> records;
    std::map<VertexId, int> colors;
    std::vector<VertexId> adopted_key;
    int adopted_phi = 0;
    int color = 0;
  };

  State init(const VertexContext& ctx) const {
    State st;
    st.label = labels->at(ctx.id);
    st.key = keys->at(ctx.id);
    std::sort(st.key.begin(), st.key.end());
    st.phi = phi->at(ctx.id);
    return st;
  }

  void step(const VertexContext& ctx, std::int64_t round, State& st,
            std::span<const InboundMessage> inbox, StepIo& io) const {
    for (const auto& m : inbox) {
      const Message& p = m.payload;
      if (p[0] == kInfo) {
        if (st.records.count(p[2])) continue;
        if (p[1] > 0) {
          Message relay = p;
          relay[1] = p[1] - 1;
          io.broadcast(relay);
        }
        InfoRecord rec;
        rec.label = Label{p[3], static_cast<int>(p[4])};
        rec.phi = static_cast<int>(p[5]);
        std::size_t pos = 6;
        const auto klen = static_cast<std::size_t>(p[pos++]);
        rec.key.assign(p.begin() + static_cast<std::ptrdiff_t>(pos),
                       p.begin() + static_cast<std::ptrdiff_t>(pos + klen));
        pos += klen;
        const auto nlen = static_cast<std::size_t>(p[pos++]);
        rec.nbrs.assign(p.begin() + static_cast<std::ptrdiff_t>(pos),
                        p.begin() + static_cast<std::ptrdiff_t>(pos + nlen));
        st.records.emplace(p[2], std::move(rec));
      } else if (p[0] == kColor) {
        if (st.colors.count(p[2])) continue;
        if (p[1] > 0) {
          Message relay = p;
          relay[1] = p[1] - 1;
          io.broadcast(relay);
        }
        st.colors[p[2]] = static_cast<int>(p[3]);
      } else {
        throw InternalCheckError("unknown message tag " + std::to_string(p[0]));
      }
    }

    if (round == 1) {
      Message m = {kInfo, reach() - 1, ctx.id, st.label.level, st.label.phase, st.phi};
      m.push_back(static_cast<std::int64_t>(st.key.size()));
      m.insert(m.end(), st.key.begin(), st.key.end());
      m.push_back(static_cast<std::int64_t>(ctx.neighbors.size()));
      m.insert(m.end(), ctx.neighbors.begin(), ctx.neighbors.end());
      io.broadcast(m);
      InfoRecord own{st.label, st.phi, st.key,
                     {ctx.neighbors.begin(), ctx.neighbors.end()}};
      st.records.emplace(ctx.id, std::move(own));
      io.wake_at(adopt_round());
      return;
    }

    if (round == adopt_round()) {
      adopt(ctx, st);
      io.wake_at(slot_round(slot_index(st.label.level, st.label.phase, st.adopted_phi)));
      return;
    }

    if (st.color != 0 || st.adopted_phi == 0) return;
    const std::int64_t my_slot =
        slot_round(slot_index(st.label.level, st.label.phase, st.adopted_phi));
    if (round < my_slot) return;  // woken early by relay mail
    act(ctx, st, io);
  }

  // The pair with the largest class among same-label records whose key runs
  // through us; ties pick the smallest key. Our own pair qualifies, so the
  // choice is never empty.
  void adopt(const VertexContext& ctx, State& st) const {
    auto dist = records_distances(ctx.id, st);
    for (const auto& [u, rec] : st.records) {
      if (rec.label != st.label) continue;
      auto it = dist.find(u);
      if (it == dist.end() || it->second > params.span()) continue;
      if (!std::binary_search(rec.key.begin(), rec.key.end(), ctx.id)) continue;
      if (rec.phi > st.adopted_phi ||
          (rec.phi == st.adopted_phi && rec.key < st.adopted_key)) {
        st.adopted_phi = rec.phi;
        st.adopted_key = rec.key;
      }
    }
    if (st.adopted_phi == 0) {
      throw InternalCheckError("vertex " + std::to_string(ctx.id) +
                               " found no pair to adopt, not even its own");
    }
  }

  // Breadth first distances over the collected records; exact up to span.
  std::map<VertexId, std::int64_t> records_distances(VertexId center, const State& st) const {
    std::map<VertexId, std::int64_t> dist;
    dist[center] = 0;
    std::vector<VertexId> frontier = {center};
    for (std::int64_t d = 1; d <= params.span() && !frontier.empty(); ++d) {
      std::vector<VertexId> next;
      for (VertexId u : frontier) {
        auto it = st.records.find(u);
        if (it == st.records.end()) continue;
        for (VertexId w : it->second.nbrs) {
          if (dist.emplace(w, d).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    return dist;
  }

  void act(const VertexContext& ctx, State& st, StepIo& io) const {
    if (st.label.phase == 2) {
      std::set<int> used;
      for (VertexId w : ctx.neighbors) {
        if (auto it = st.colors.find(w); it != st.colors.end()) used.insert(it->second);
      }
      int pick = 1;
      while (used.count(pick)) ++pick;
      if (pick > params.palette) {
        throw InternalCheckError("low degree vertex " + std::to_string(ctx.id) +
                                 " saw every color taken");
      }
      assign(ctx, st, io, pick);
      return;
    }

    // Cycle slot: rebuild the stored cycle inside the layers at or above our
    // level and extend the surrounding colors over it. Every member adopting
    // this pair computes the same extension from the same records, and only
    // applies its own entry.
    std::vector<VertexId> view_vertices;
    for (VertexId u : st.adopted_key) {
      auto it = st.records.find(u);
      if (it == st.records.end()) {
        throw InternalCheckError("record of key member " + std::to_string(u) + " out of reach");
      }
      if (st.colors.count(u)) {
        throw InternalCheckError("key member " + std::to_string(u) +
                                 " was already colored at its cycle slot");
      }
      view_vertices.push_back(u);
      for (VertexId w : it->second.nbrs) view_vertices.push_back(w);
    }
    std::sort(view_vertices.begin(), view_vertices.end());
    view_vertices.erase(std::unique(view_vertices.begin(), view_vertices.end()),
                        view_vertices.end());
    std::vector<VertexId> in_layer;
    for (VertexId u : view_vertices) {
      auto it = st.records.find(u);
      if (it == st.records.end()) {
        throw InternalCheckError("record of key neighbor " + std::to_string(u) +
                                 " out of reach");
      }
      if (it->second.label.level >= st.label.level) in_layer.push_back(u);
    }
    EdgeList edges;
    std::set<VertexId> member(in_layer.begin(), in_layer.end());
    for (VertexId u : in_layer) {
      for (VertexId w : st.records.at(u).nbrs) {
        if (u < w && member.count(w)) edges.push_back({u, w});
      }
    }
    Graph view = Graph::from_edges(in_layer, edges);
    auto cycle = hamiltonian_cycle_on(view, st.adopted_key);
    if (!cycle) {
      throw InternalCheckError("adopted key of vertex " + std::to_string(ctx.id) +
                               " no longer spans a cycle");
    }
    ColorAssignment partial;
    partial.palette_size = params.palette;
    for (VertexId u : in_layer) {
      if (auto it = st.colors.find(u); it != st.colors.end()) partial.set(u, it->second);
    }
    ColorAssignment extended = extend_on_cycle(view, *cycle, partial, params.palette);
    assign(ctx, st, io, extended.color_of(ctx.id));
  }

  void assign(const VertexContext& ctx, State& st, StepIo& io, int color) const {
    st.color = color;
    st.colors[ctx.id] = color;
    io.broadcast({kColor, reach() - 1, ctx.id, color});
  }
};

}  // namespace

FinalResult run_final_color(const Graph& g, const std::unordered_map<VertexId, Label>& labels,
                            const std::unordered_map<VertexId, std::vector<VertexId>>& keys,
                            const std::unordered_map<VertexId, int>& phi,
                            const PartitionParams& params, EngineOptions options) {
  for (VertexId v : g.vertices()) {
    auto lt = labels.find(v);
    if (lt == labels.end() || !lt->second.labeled()) {
      throw InputError("vertex " + std::to_string(v) + " carries no label");
    }
    if (lt->second.level > params.iterations) {
      throw InputError("label level beyond the iteration bound at vertex " + std::to_string(v));
    }
    auto kt = keys.find(v);
    if (kt == keys.end() || kt->second.empty()) {
      throw InputError("vertex " + std::to_string(v) + " carries no key");
    }
    auto pt = phi.find(v);
    if (pt == phi.end() || pt->second < 1) {
      throw InputError("vertex " + std::to_string(v) + " carries no class");
    }
    const std::int64_t bound =
        lt->second.phase == 2 ? params.phase2_colors : params.super_palette;
    if (pt->second > bound) {
      throw InputError("class out of palette at vertex " + std::to_string(v));
    }
  }

  FinalProgram program;
  program.params = params;
  program.labels = &labels;
  program.keys = &keys;
  program.phi = &phi;

  auto run_result = run(g, program, options);

  FinalResult out;
  out.trace = std::move(run_result.trace);
  out.coloring.palette_size = params.palette;
  for (VertexId v : g.vertices()) {
    const auto& st = run_result.state_of(v);
    if (st.color == 0) {
      throw InternalCheckError("vertex " + std::to_string(v) + " finished uncolored");
    }
    out.coloring.set(v, st.color);
  }
  return out;
}

}  // namespace plancol

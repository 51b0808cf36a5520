#include "plancol/sync_color.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "plancol/color_reduce.hpp"
#include "plancol/errors.hpp"

namespace plancol {

std::vector<std::int64_t> SuperGraph::degrees() const {
  std::vector<std::int64_t> deg(nodes.size(), 0);
  for (auto [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

std::int64_t SuperGraph::max_degree() const {
  std::int64_t best = 0;
  for (auto d : degrees()) best = std::max(best, d);
  return best;
}

SuperGraph build_super_graph(const Graph& g, std::int64_t level,
                             const std::unordered_map<VertexId, Label>& labels,
                             const std::unordered_map<VertexId, std::vector<VertexId>>& keys) {
  std::set<std::vector<VertexId>> distinct;
  for (const auto& [v, label] : labels) {
    if (label.level != level || label.phase != 1) continue;
    auto key = keys.at(v);
    std::sort(key.begin(), key.end());
    distinct.insert(std::move(key));
  }
  SuperGraph sg;
  sg.nodes.assign(distinct.begin(), distinct.end());

  int width = 1;
  for (VertexId v : g.vertices()) {
    width = std::max(width, static_cast<int>(std::to_string(v).size()));
  }
  for (const auto& members : sg.nodes) {
    std::string id;
    for (VertexId m : members) {
      std::string digits = std::to_string(m);
      id.append(static_cast<std::size_t>(width) - digits.size(), '0');
      id += digits;
    }
    sg.node_ids.push_back(std::move(id));
    sg.reps.push_back(members.back());
  }

  // Closed neighborhoods: adjacency means a member of one node touches or
  // coincides with a member of the other.
  std::vector<std::set<VertexId>> reach(sg.nodes.size());
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    for (VertexId m : sg.nodes[i]) {
      for (VertexId w : g.neighbors(m)) reach[i].insert(w);
    }
  }
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < sg.nodes.size(); ++j) {
      bool hit = false;
      for (VertexId m : sg.nodes[j]) {
        if (reach[i].count(m)) {
          hit = true;
          break;
        }
      }
      if (hit) sg.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return sg;
}

std::uint64_t super_priority(std::int64_t level, const std::vector<VertexId>& members) {
  std::uint64_t h = detail::mix_seed(0x736e6f77ULL, static_cast<std::uint64_t>(level));
  for (VertexId m : members) h = detail::mix_seed(h, static_cast<std::uint64_t>(m));
  return h;
}

namespace {

constexpr std::int64_t kHello = 1;    // [tag, level, phase]
constexpr std::int64_t kKey = 2;      // [tag, ttl, level, len, members...]
constexpr std::int64_t kMember = 3;   // [tag, count, (level, len, members...)...]
constexpr std::int64_t kReport = 4;   // [tag, ttl, origin, count, (level, len, key,
                                      //   witness_count, (len, key)...)...]
constexpr std::int64_t kCommit = 5;   // [tag, ttl, level, len, members..., color]
constexpr std::int64_t kPhase2 = 6;   // [tag, level, code, value]; code 0 chain, 1 final

using LevelKey = std::pair<std::int64_t, std::vector<VertexId>>;

std::vector<VertexId> read_key(const Message& m, std::size_t& pos) {
  const auto len = static_cast<std::size_t>(m[pos++]);
  std::vector<VertexId> key(m.begin() + static_cast<std::ptrdiff_t>(pos),
                            m.begin() + static_cast<std::ptrdiff_t>(pos + len));
  pos += len;
  return key;
}

void write_key(Message& m, const std::vector<VertexId>& key) {
  m.push_back(static_cast<std::int64_t>(key.size()));
  m.insert(m.end(), key.begin(), key.end());
}

// Total order on same-level keys for the greedy commit rule; strict, since
// distinct keys differ as member lists.
bool outranks(std::int64_t level, const std::vector<VertexId>& a,
              const std::vector<VertexId>& b) {
  const auto pa = super_priority(level, a), pb = super_priority(level, b);
  if (pa != pb) return pa > pb;
  return a > b;
}

struct SyncProgram {
  PartitionParams params;
  const std::unordered_map<VertexId, Label>* labels = nullptr;
  const std::unordered_map<VertexId, std::vector<VertexId>>* keys = nullptr;
  LinialPlan plan;  // for the phase-2 id reduction, shared by every level

  std::int64_t span() const { return params.span(); }
  std::int64_t window() const { return 2 * span() + 1; }
  std::int64_t first_slot() const { return 2 * span() + 4; }
  std::int64_t steps() const { return static_cast<std::int64_t>(plan.steps.size()); }
  std::int64_t shrink_base() const { return steps() + 3; }

  struct OwnedKey {
    std::vector<VertexId> members;
    std::set<std::vector<VertexId>> nbr_keys;
    bool committed = false;
  };

  struct State {
    Label label;
    std::vector<VertexId> key;
    int phi = 0;

    // discovery bookkeeping
    std::set<LevelKey> memberships;
    std::set<LevelKey> seen_keys;
    std::set<VertexId> seen_reports;
    std::set<LevelKey> seen_commits;
    std::map<VertexId, Label> nbr_label;
    std::map<VertexId, std::vector<LevelKey>> nbr_memberships;

    // greedy node coloring (largest member of a key runs its node)
    std::map<LevelKey, OwnedKey> owned;
    std::map<LevelKey, std::int64_t> committed;  // any committed key heard
    std::int64_t next_slot = 0;

    // phase-2 id reduction
    std::vector<VertexId> class_nbrs;
    std::int64_t color = 0;
    std::map<VertexId, std::int64_t> nbr_color;
    std::map<VertexId, int> nbr_final;
  };

  State init(const VertexContext& ctx) const {
    State st;
    st.label = labels->at(ctx.id);
    st.key = keys->at(ctx.id);
    std::sort(st.key.begin(), st.key.end());
    return st;
  }

  void settle_phase2(State& st, StepIo& io) const {
    const std::int64_t current = st.color + 1;
    if (current <= params.phase2_colors) {
      st.phi = static_cast<int>(current);
      return;
    }
    io.wake_at(shrink_round_for_class(shrink_base(), plan.final_colors, current));
  }

  void commit_pass(const VertexContext& ctx, State& st, StepIo& io) const {
    bool pending = false;
    for (auto& [lk, node] : st.owned) {
      if (node.committed) continue;
      if (static_cast<std::int64_t>(node.nbr_keys.size()) >= params.super_palette) {
        throw InternalCheckError("contracted node at vertex " + std::to_string(ctx.id) +
                                 " has degree " + std::to_string(node.nbr_keys.size()) +
                                 ", breaking the palette bound");
      }
      bool is_max = true;
      std::set<std::int64_t> used;
      for (const auto& nk : node.nbr_keys) {
        auto it = st.committed.find({lk.first, nk});
        if (it != st.committed.end()) {
          used.insert(it->second);
        } else if (!outranks(lk.first, lk.second, nk)) {
          is_max = false;
        }
      }
      if (!is_max) {
        pending = true;
        continue;
      }
      std::int64_t color = 1;
      while (used.count(color)) ++color;
      node.committed = true;
      st.committed[lk] = color;
      Message m = {kCommit, window() - 1, lk.first};
      write_key(m, lk.second);
      m.push_back(color);
      io.broadcast(m);
      if (st.label.level == lk.first && st.key == lk.second) {
        st.phi = static_cast<int>(color);
      }
    }
    if (pending) {
      st.next_slot += window() + 1;
      io.wake_at(st.next_slot);
    }
  }

  void step(const VertexContext& ctx, std::int64_t round, State& st,
            std::span<const InboundMessage> inbox, StepIo& io) const {
    for (const auto& m : inbox) {
      const Message& p = m.payload;
      switch (p[0]) {
        case kHello:
          st.nbr_label[m.from] = Label{p[1], static_cast<int>(p[2])};
          break;
        case kKey: {
          std::size_t pos = 3;
          auto key = read_key(p, pos);
          LevelKey lk{p[2], std::move(key)};
          if (!st.seen_keys.insert(lk).second) break;
          if (p[1] > 0) {
            Message relay = p;
            relay[1] = p[1] - 1;
            io.broadcast(relay);
          }
          if (std::binary_search(lk.second.begin(), lk.second.end(), ctx.id)) {
            st.memberships.insert(std::move(lk));
          }
          break;
        }
        case kMember: {
          auto& list = st.nbr_memberships[m.from];
          std::size_t pos = 2;
          for (std::int64_t r = 0; r < p[1]; ++r) {
            std::int64_t level = p[pos++];
            list.push_back({level, read_key(p, pos)});
          }
          break;
        }
        case kReport: {
          if (!st.seen_reports.insert(p[2]).second) break;
          if (p[1] > 0) {
            Message relay = p;
            relay[1] = p[1] - 1;
            io.broadcast(relay);
          }
          std::size_t pos = 4;
          for (std::int64_t r = 0; r < p[3]; ++r) {
            std::int64_t level = p[pos++];
            auto target = read_key(p, pos);
            const auto wcount = p[pos++];
            LevelKey lk{level, std::move(target)};
            auto it = st.owned.find(lk);
            for (std::int64_t w = 0; w < wcount; ++w) {
              auto witness = read_key(p, pos);
              if (it != st.owned.end()) it->second.nbr_keys.insert(std::move(witness));
            }
          }
          break;
        }
        case kCommit: {
          std::size_t pos = 3;
          auto key = read_key(p, pos);
          LevelKey lk{p[2], std::move(key)};
          if (!st.seen_commits.insert(lk).second) break;
          if (p[1] > 0) {
            Message relay = p;
            relay[1] = p[1] - 1;
            io.broadcast(relay);
          }
          st.committed[lk] = p[pos];
          if (st.label.phase == 1 && st.label.level == lk.first && st.key == lk.second) {
            st.phi = static_cast<int>(p[pos]);
          }
          break;
        }
        case kPhase2:
          if (st.label.phase == 2 && st.label.level == p[1]) {
            if (p[2] == 0) {
              st.nbr_color[m.from] = p[3];
            } else {
              st.nbr_final[m.from] = static_cast<int>(p[3]);
            }
          }
          break;
        default:
          throw InternalCheckError("unknown message tag " + std::to_string(p[0]));
      }
    }

    if (round == 1) {
      io.broadcast({kHello, st.label.level, st.label.phase});
      if (st.label.phase == 1) {
        Message m = {kKey, span() - 1, st.label.level};
        write_key(m, st.key);
        io.broadcast(m);
        LevelKey own{st.label.level, st.key};
        st.seen_keys.insert(own);
        st.memberships.insert(std::move(own));
        io.wake_at(span() + 2);
      } else {
        io.wake_at(2);
      }
      return;
    }

    if (st.label.phase == 2) {
      phase2_step(ctx, round, st, io);
      return;
    }

    if (round == span() + 2) {
      Message m = {kMember, static_cast<std::int64_t>(st.memberships.size())};
      for (const auto& [level, key] : st.memberships) {
        m.push_back(level);
        write_key(m, key);
      }
      io.broadcast(m);
      io.wake_at(span() + 3);
      return;
    }
    if (round == span() + 3) {
      // Witness pass: for each key we belong to, every other same-level key
      // seen on ourselves or on a neighbor is a contracted-graph neighbor.
      Message m = {kReport, span() - 1, ctx.id,
                   static_cast<std::int64_t>(st.memberships.size())};
      st.seen_reports.insert(ctx.id);
      for (const auto& [level, key] : st.memberships) {
        m.push_back(level);
        write_key(m, key);
        std::set<std::vector<VertexId>> witnesses;
        auto absorb = [&](const std::vector<LevelKey>& list) {
          for (const auto& [l2, k2] : list) {
            if (l2 == level && k2 != key) witnesses.insert(k2);
          }
        };
        absorb({st.memberships.begin(), st.memberships.end()});
        for (const auto& [w, list] : st.nbr_memberships) absorb(list);
        m.push_back(static_cast<std::int64_t>(witnesses.size()));
        for (const auto& w : witnesses) write_key(m, w);
        if (key.back() == ctx.id) {
          auto& node = st.owned[{level, key}];
          node.members = key;
          node.nbr_keys.insert(witnesses.begin(), witnesses.end());
        }
      }
      io.broadcast(m);
      if (!st.owned.empty()) {
        st.next_slot = first_slot();
        io.wake_at(st.next_slot);
      }
      return;
    }
    if (st.next_slot != 0 && round == st.next_slot) {
      commit_pass(ctx, st, io);
    }
  }

  void phase2_step(const VertexContext& ctx, std::int64_t round, State& st, StepIo& io) const {
    if (st.phi != 0) return;
    if (round == 2) {
      for (VertexId w : ctx.neighbors) {
        auto it = st.nbr_label.find(w);
        if (it == st.nbr_label.end()) {
          throw InternalCheckError("neighbor " + std::to_string(w) + " sent no greeting");
        }
        if (it->second == st.label) {
          st.class_nbrs.push_back(w);
          st.nbr_color[w] = w;  // ids are the initial colors
        }
      }
      if (st.class_nbrs.empty()) {
        st.phi = 1;
        return;
      }
      st.color = ctx.id;
      if (steps() == 0) {
        settle_phase2(st, io);
        return;
      }
    }
    if (round >= 2 && round <= steps() + 1) {
      std::vector<std::int64_t> nbr_colors;
      nbr_colors.reserve(st.class_nbrs.size());
      for (VertexId w : st.class_nbrs) {
        auto it = st.nbr_color.find(w);
        if (it == st.nbr_color.end()) {
          throw InternalCheckError("class neighbor " + std::to_string(w) +
                                   " skipped a reduction round");
        }
        nbr_colors.push_back(it->second);
      }
      st.color = linial_recolor(plan.steps[static_cast<std::size_t>(round - 2)], st.color,
                                nbr_colors);
      io.broadcast({kPhase2, st.label.level, 0, st.color});
      if (round == steps() + 1) {
        settle_phase2(st, io);
      } else {
        io.wake_at(round + 1);
      }
      return;
    }
    // Scheduled shrink: classes above the palette recolor one round each,
    // largest class first. Mail can wake us early; the pending wake survives.
    const std::int64_t slot =
        shrink_round_for_class(shrink_base(), plan.final_colors, st.color + 1);
    if (round < slot) return;
    std::set<std::int64_t> used;
    for (VertexId w : st.class_nbrs) {
      if (auto it = st.nbr_final.find(w); it != st.nbr_final.end()) used.insert(it->second);
      if (auto it = st.nbr_color.find(w); it != st.nbr_color.end()) {
        if (it->second + 1 <= params.phase2_colors) used.insert(it->second + 1);
      }
    }
    std::int64_t pick = 1;
    while (used.count(pick)) ++pick;
    if (pick > params.phase2_colors) {
      throw InternalCheckError("phase-2 class of vertex " + std::to_string(ctx.id) +
                               " ran out of colors");
    }
    st.phi = static_cast<int>(pick);
    io.broadcast({kPhase2, st.label.level, 1, pick});
  }
};

}  // namespace

PhiResult assign_phi(const Graph& g, const std::unordered_map<VertexId, Label>& labels,
                     const std::unordered_map<VertexId, std::vector<VertexId>>& keys,
                     const PartitionParams& params, EngineOptions options) {
  std::int64_t max_id = 0;
  for (VertexId v : g.vertices()) {
    auto it = labels.find(v);
    if (it == labels.end() || !it->second.labeled()) {
      throw InputError("vertex " + std::to_string(v) + " carries no label");
    }
    if (it->second.phase != 1 && it->second.phase != 2) {
      throw InputError("vertex " + std::to_string(v) + " has phase " +
                       std::to_string(it->second.phase));
    }
    auto kt = keys.find(v);
    if (kt == keys.end() || kt->second.empty()) {
      throw InputError("vertex " + std::to_string(v) + " carries no key");
    }
    if (it->second.phase == 1 &&
        std::find(kt->second.begin(), kt->second.end(), v) == kt->second.end()) {
      throw InputError("key of vertex " + std::to_string(v) + " misses its owner");
    }
    max_id = std::max(max_id, v);
  }

  SyncProgram program;
  program.params = params;
  program.labels = &labels;
  program.keys = &keys;
  program.plan = plan_linial_chain(max_id + 1, params.deg_threshold);

  auto run_result = run(g, program, options);

  PhiResult out;
  out.trace = std::move(run_result.trace);
  for (VertexId v : g.vertices()) {
    const auto& st = run_result.state_of(v);
    if (st.phi == 0) {
      throw InternalCheckError("vertex " + std::to_string(v) + " finished without a color class");
    }
    out.phi[v] = st.phi;
  }

  // Self check: classes must be proper per level and phase, inside their
  // palettes, and the contracted nodes must respect the degree bound.
  std::set<std::int64_t> levels;
  for (const auto& [v, label] : labels) levels.insert(label.level);
  for (std::int64_t level : levels) {
    for (VertexId v : g.vertices()) {
      const Label lv = labels.at(v);
      if (lv.level != level || lv.phase != 2) continue;
      if (out.phi[v] > params.phase2_colors) {
        throw InternalCheckError("phase-2 color out of palette at vertex " + std::to_string(v));
      }
      for (VertexId w : g.neighbors(v)) {
        if (labels.at(w) == lv && out.phi[w] == out.phi[v]) {
          throw InternalCheckError("phase-2 neighbors " + std::to_string(v) + " and " +
                                   std::to_string(w) + " share a class");
        }
      }
    }
    SuperGraph sg = build_super_graph(g, level, labels, keys);
    if (sg.nodes.empty()) continue;
    if (sg.max_degree() >= params.super_palette) {
      throw InternalCheckError("contracted graph at level " + std::to_string(level) +
                               " exceeds the degree bound");
    }
    std::map<std::vector<VertexId>, int> node_color;
    for (const auto& [v, label] : labels) {
      if (label.level != level || label.phase != 1) continue;
      auto key = keys.at(v);
      std::sort(key.begin(), key.end());
      auto [it, fresh] = node_color.try_emplace(std::move(key), out.phi[v]);
      if (!fresh && it->second != out.phi[v]) {
        throw InternalCheckError("members of one key disagree on its color");
      }
      if (out.phi[v] > params.super_palette) {
        throw InternalCheckError("phase-1 color out of palette at vertex " + std::to_string(v));
      }
    }
    for (auto [a, b] : sg.edges) {
      if (node_color.at(sg.nodes[static_cast<std::size_t>(a)]) ==
          node_color.at(sg.nodes[static_cast<std::size_t>(b)])) {
        throw InternalCheckError("adjacent contracted nodes share a color at level " +
                                 std::to_string(level));
      }
    }
  }
  return out;
}

}  // namespace plancol

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "plancol/errors.hpp"
#include "plancol/graph.hpp"

namespace plancol {

// Message passing model: in every round each vertex receives the messages sent
// to it in the previous round, computes, and sends messages to neighbors.
// Message size is unbounded; we still record sizes so bandwidth can be
// inspected offline.
using Message = std::vector<std::int64_t>;

struct InboundMessage {
  VertexId from = 0;
  Message payload;
};

struct VertexContext {
  VertexId id = 0;
  std::int64_t n = 0;       // number of vertices, global knowledge
  std::uint64_t seed = 0;   // per-vertex stream for randomized programs
  std::span<const VertexId> neighbors;  // sorted

  std::int64_t degree() const { return static_cast<std::int64_t>(neighbors.size()); }
};

struct RoundStat {
  std::int64_t round = 0;     // logical round index (1-based)
  std::int64_t messages = 0;  // messages sent in this round
  std::int64_t max_bits = 0;  // largest message sent in this round
};

struct RoundTrace {
  // One entry per round in which at least one message was sent. Rounds where
  // the whole network is provably silent are skipped by the scheduler and are
  // free; they never carry information.
  std::vector<RoundStat> per_round;
  std::int64_t logical_span = 0;  // last logical round that was executed
  bool all_halted = false;        // false means the run ended by quiescence
  bool stopped_early = false;     // cut off by EngineOptions::stop_at_round

  std::int64_t rounds_used() const { return static_cast<std::int64_t>(per_round.size()); }
  std::vector<std::int64_t> messages_per_round() const {
    std::vector<std::int64_t> out;
    out.reserve(per_round.size());
    for (const auto& r : per_round) out.push_back(r.messages);
    return out;
  }
  std::int64_t max_message_bits() const {
    std::int64_t m = 0;
    for (const auto& r : per_round) m = std::max(m, r.max_bits);
    return m;
  }
  std::int64_t total_messages() const {
    std::int64_t m = 0;
    for (const auto& r : per_round) m += r.messages;
    return m;
  }
};

class RoundLimitError : public std::runtime_error {
 public:
  RoundLimitError(std::int64_t limit, RoundTrace trace)
      : std::runtime_error("round limit " + std::to_string(limit) +
                           " exceeded with unhalted vertices"),
        trace(std::move(trace)) {}
  RoundTrace trace;
};

inline constexpr std::int64_t kNoWake = std::numeric_limits<std::int64_t>::max();

// Per-step outbox and scheduling control handed to the program. After a step
// the vertex sleeps until its wake round (default: only a message wakes it).
class StepIo {
 public:
  void send(VertexId to, Message payload) {
    if (!std::binary_search(ctx_->neighbors.begin(), ctx_->neighbors.end(), to)) {
      throw InternalCheckError("vertex " + std::to_string(ctx_->id) +
                               " tried to message non-neighbor " + std::to_string(to));
    }
    outbox_.push_back({to, std::move(payload)});
  }
  void broadcast(const Message& payload) {
    for (VertexId w : ctx_->neighbors) outbox_.push_back({w, payload});
  }
  void halt() { halt_ = true; }
  // Schedule a self-wake at the given absolute logical round; a message still
  // wakes the vertex earlier. Replaces any previously scheduled wake. Without
  // a scheduled wake the vertex sleeps until mail arrives.
  void wake_at(std::int64_t round) { wake_ = std::min(wake_, round); }

 private:
  template <class P>
  friend class Engine;
  const VertexContext* ctx_ = nullptr;
  std::vector<std::pair<VertexId, Message>> outbox_;
  bool halt_ = false;
  std::int64_t wake_ = kNoWake;
};

struct EngineOptions {
  std::int64_t round_limit = std::numeric_limits<std::int64_t>::max() / 4;
  std::uint64_t program_seed = 0;
  // When set, the per-round step order is shuffled with this seed. Program
  // correctness must not depend on intra-round order; tests exercise this.
  std::optional<std::uint64_t> step_order_seed;
  // When set, the run stops cleanly before executing any round past this one.
  // Unlike round_limit this is not an error; trace.stopped_early records it.
  // Used to cut programs to a fixed horizon (locality tests, t-round
  // adversary runs).
  std::optional<std::int64_t> stop_at_round;
};

template <class Program>
struct RunResult {
  std::vector<typename Program::State> states;  // by vertex index
  RoundTrace trace;
  const Graph* graph = nullptr;

  const typename Program::State& state_of(VertexId v) const {
    return states[static_cast<std::size_t>(graph->index_of(v))];
  }
};

namespace detail {
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL + b * 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}
}  // namespace detail

template <class Program>
class Engine {
 public:
  Engine(const Graph& g, Program& program, EngineOptions options)
      : g_(g), program_(program), opt_(options) {}

  RunResult<Program> run() {
    const int n = static_cast<int>(g_.vertex_count());
    contexts_.resize(n);
    for (int i = 0; i < n; ++i) {
      const VertexId id = g_.id_at(i);
      contexts_[i] = VertexContext{id, g_.vertex_count(),
                                   detail::mix_seed(opt_.program_seed, (std::uint64_t)id),
                                   std::span<const VertexId>(g_.neighbors(id))};
    }
    RunResult<Program> result;
    result.graph = &g_;
    result.states.reserve(n);
    for (int i = 0; i < n; ++i) result.states.push_back(program_.init(contexts_[i]));

    // Mail sent in round r sits in `staging` and is delivered into `inbox` at
    // the start of round r + 1, so intra-round sends are never visible early.
    std::vector<std::vector<InboundMessage>> inbox(n), staging(n);
    std::vector<char> halted(n, 0), staged(n, 0);
    std::vector<std::int64_t> wake(n, 1);
    // Lazy min-heap of (wake round, vertex); stale entries are skipped.
    using HeapItem = std::pair<std::int64_t, int>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> wake_heap;
    for (int i = 0; i < n; ++i) wake_heap.push({1, i});
    std::vector<int> recipients;  // vertices with staged mail
    int alive = n;
    std::int64_t round = 0;

    while (alive > 0) {
      // Next event: staged mail forces round + 1, otherwise the earliest wake.
      std::int64_t next_round = recipients.empty() ? kNoWake : round + 1;
      while (!wake_heap.empty()) {
        auto [r, v] = wake_heap.top();
        if (halted[v] || wake[v] != r) {
          wake_heap.pop();
          continue;
        }
        next_round = std::min(next_round, r);
        break;
      }
      if (next_round == kNoWake) break;  // quiescent: nobody will ever act again
      if (opt_.stop_at_round && next_round > *opt_.stop_at_round) {
        result.trace.stopped_early = true;
        break;
      }
      round = next_round;
      if (round > opt_.round_limit) {
        result.trace.logical_span = round;
        throw RoundLimitError(opt_.round_limit, result.trace);
      }

      std::vector<int> to_step;
      for (int v : recipients) {
        staged[v] = 0;
        if (halted[v]) {
          staging[v].clear();
          continue;
        }
        inbox[v].swap(staging[v]);
        to_step.push_back(v);
      }
      recipients.clear();
      while (!wake_heap.empty() && wake_heap.top().first <= round) {
        auto [r, v] = wake_heap.top();
        wake_heap.pop();
        if (halted[v] || wake[v] != r) continue;
        wake[v] = kNoWake;
        to_step.push_back(v);
      }
      std::sort(to_step.begin(), to_step.end());
      to_step.erase(std::unique(to_step.begin(), to_step.end()), to_step.end());
      if (opt_.step_order_seed) {
        std::mt19937_64 rng(detail::mix_seed(*opt_.step_order_seed, (std::uint64_t)round));
        std::shuffle(to_step.begin(), to_step.end(), rng);
      }

      std::int64_t sent = 0, max_bits = 0;
      for (int v : to_step) {
        std::sort(inbox[v].begin(), inbox[v].end(),
                  [](const InboundMessage& a, const InboundMessage& b) { return a.from < b.from; });
        StepIo io;
        io.ctx_ = &contexts_[v];
        program_.step(contexts_[v], round, result.states[v],
                      std::span<const InboundMessage>(inbox[v]), io);
        inbox[v].clear();
        // Sends issued in the halting step are still delivered; halt only
        // means no further steps for this vertex.
        for (auto& [to, payload] : io.outbox_) {
          ++sent;
          max_bits = std::max(max_bits, static_cast<std::int64_t>(payload.size()) * 64);
          int ti = g_.index_of(to);
          if (halted[ti]) continue;  // mail to a halted vertex is dropped
          if (!staged[ti]) {
            staged[ti] = 1;
            recipients.push_back(ti);
          }
          staging[ti].push_back({contexts_[v].id, std::move(payload)});
        }
        if (io.halt_) {
          halted[v] = 1;
          --alive;
          continue;
        }
        if (io.wake_ != kNoWake) {
          if (io.wake_ <= round) {
            throw InternalCheckError("vertex " + std::to_string(contexts_[v].id) +
                                     " requested a wake in the past");
          }
          wake[v] = io.wake_;
          wake_heap.push({io.wake_, v});
        }
      }
      result.trace.logical_span = round;
      if (sent > 0) result.trace.per_round.push_back({round, sent, max_bits});
    }
    result.trace.all_halted = (alive == 0);
    return result;
  }

 private:
  const Graph& g_;
  Program& program_;
  EngineOptions opt_;
  std::vector<VertexContext> contexts_;
};

// Executes rounds until every vertex halts, the network is quiescent (nobody
// has mail and nobody scheduled a wake), or the round limit trips.
template <class Program>
RunResult<Program> run(const Graph& g, Program& program, EngineOptions options = {}) {
  return Engine<Program>(g, program, options).run();
}

// --- Radius-bounded neighborhood collection -------------------------------

struct BallRecord {
  std::int64_t label = 0;
  std::vector<VertexId> neighbors;

  bool operator==(const BallRecord&) const = default;
};

// After the run, each vertex knows the full labeled induced subgraph on its
// radius-r ball: `records` holds one entry per ball member with its label and
// its complete neighbor list (edges outside the ball are filtered on use).
struct CollectBallProgram {
  std::int64_t radius = 0;
  // Label attached to every vertex; vertices absent from the map carry their
  // own id as label.
  std::unordered_map<VertexId, std::int64_t> labels;

  struct State {
    std::map<VertexId, BallRecord> records;
    bool announced = false;
  };

  State init(const VertexContext& ctx) const;
  void step(const VertexContext& ctx, std::int64_t round, State& state,
            std::span<const InboundMessage> inbox, StepIo& io) const;
};

// Convenience wrapper: run CollectBallProgram and return the per-vertex states.
RunResult<CollectBallProgram> collect_ball(const Graph& g, std::int64_t radius,
                                           const std::unordered_map<VertexId, std::int64_t>& labels = {},
                                           EngineOptions options = {});

// Rebuild a Graph from collected ball records (vertices = record keys, edges =
// record adjacencies restricted to collected vertices).
Graph ball_records_to_graph(const std::map<VertexId, BallRecord>& records);

}  // namespace plancol

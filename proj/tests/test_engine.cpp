#include <doctest.h>

#include <map>

#include "plancol/engine.hpp"
#include "plancol/errors.hpp"
#include "plancol/generators.hpp"
#include "support.hpp"

using namespace plancol;

namespace {

// Sends its id to every neighbor in round 1; remembers what arrives and when.
// Halting waits for the mail: messages to already halted vertices are dropped.
struct EchoProgram {
  struct State {
    std::map<VertexId, std::int64_t> arrivals;  // sender -> round received
  };
  State init(const VertexContext&) const { return {}; }
  void step(const VertexContext&, std::int64_t round, State& st,
            std::span<const InboundMessage> inbox, StepIo& io) const {
    for (const auto& m : inbox) st.arrivals[m.from] = round;
    if (round == 1) {
      io.broadcast({41});
    } else {
      io.halt();
    }
  }
};

// Does nothing but sleep until a fixed round.
struct SleeperProgram {
  std::int64_t target = 0;
  struct State {
    std::int64_t last_round = 0;
  };
  State init(const VertexContext&) const { return {}; }
  void step(const VertexContext&, std::int64_t round, State& st,
            std::span<const InboundMessage>, StepIo& io) const {
    st.last_round = round;
    if (round < target) {
      io.wake_at(target);
    } else {
      io.halt();
    }
  }
};

struct BadWakeProgram {
  struct State {};
  State init(const VertexContext&) const { return {}; }
  void step(const VertexContext&, std::int64_t round, State&, std::span<const InboundMessage>,
            StepIo& io) const {
    io.wake_at(round);  // not in the future: the engine must reject this
  }
};

// Vertex 1 sends one message and halts in the same step; delivery must still
// happen as long as the receiver is alive to read it.
struct PartingShotProgram {
  struct State {
    bool got_mail = false;
  };
  State init(const VertexContext&) const { return {}; }
  void step(const VertexContext& ctx, std::int64_t round, State& st,
            std::span<const InboundMessage> inbox, StepIo& io) const {
    if (!inbox.empty()) {
      st.got_mail = true;
      io.halt();
      return;
    }
    if (ctx.id == 1 && round == 1) {
      io.send(2, {7});
      io.halt();
    }
  }
};

}  // namespace

TEST_CASE("messages sent in round r arrive in round r+1") {
  Graph g = path_graph(3);
  EchoProgram p;
  auto rr = run(g, p);
  CHECK(rr.state_of(2).arrivals.at(1) == 2);
  CHECK(rr.state_of(2).arrivals.at(3) == 2);
  CHECK(rr.state_of(1).arrivals.at(2) == 2);
  CHECK(rr.trace.rounds_used() == 1);  // only round 1 carried messages
  CHECK(rr.trace.per_round[0].messages == 4);
  CHECK(rr.trace.logical_span == 2);
}

TEST_CASE("silent rounds are skipped but count toward the span") {
  Graph g = Graph::from_edges({1, 2}, {});
  SleeperProgram p{1000};
  auto rr = run(g, p);
  CHECK(rr.trace.logical_span == 1000);
  CHECK(rr.trace.rounds_used() == 0);
  CHECK(rr.trace.all_halted);
  CHECK(rr.state_of(1).last_round == 1000);
}

TEST_CASE("waking at the current round is an internal error") {
  Graph g = path_graph(2);
  BadWakeProgram p;
  CHECK_THROWS_AS(run(g, p), InternalCheckError);
}

TEST_CASE("sends are flushed before a halt takes effect") {
  Graph g = path_graph(2);
  PartingShotProgram p;
  auto rr = run(g, p);
  CHECK(rr.state_of(2).got_mail);
  CHECK(rr.trace.all_halted);
}

TEST_CASE("stop_at_round cuts a run without erroring") {
  Graph g = path_graph(2);
  SleeperProgram p{50};
  EngineOptions opt;
  opt.stop_at_round = 10;
  auto rr = run(g, p, opt);
  CHECK(rr.trace.stopped_early);
  CHECK(!rr.trace.all_halted);
  CHECK(rr.state_of(1).last_round == 1);
}

TEST_CASE("round_limit overflow raises") {
  Graph g = path_graph(2);
  SleeperProgram p{100};
  EngineOptions opt;
  opt.round_limit = 10;
  CHECK_THROWS_AS(run(g, p, opt), RoundLimitError);
}

TEST_CASE("collect_ball matches the offline ball oracle") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    Graph g = triangulation_graph(24, seed);
    for (std::int64_t radius : {0, 1, 2, 3}) {
      auto rr = collect_ball(g, radius);
      for (VertexId v : g.vertices()) {
        const auto& records = rr.state_of(v).records;
        std::vector<VertexId> collected;
        for (const auto& [id, rec] : records) {
          collected.push_back(id);
          CHECK(rec.neighbors == g.neighbors(id));
          CHECK(rec.label == id);
        }
        CHECK(collected == ball(g, v, radius));
      }
    }
  }
}

TEST_CASE("radius zero collection sends nothing") {
  Graph g = grid_graph(3, 3);
  auto rr = collect_ball(g, 0);
  CHECK(rr.trace.total_messages() == 0);
  CHECK(rr.state_of(5).records.size() == 1);
}

TEST_CASE("collected records rebuild the induced ball subgraph") {
  Graph g = hex_grid_graph(5, 6);
  auto rr = collect_ball(g, 3);
  for (VertexId v : g.vertices()) {
    Graph local = ball_records_to_graph(rr.state_of(v).records);
    Graph expected = induced_subgraph(g, ball(g, v, 3));
    CHECK(local.vertices() == expected.vertices());
    CHECK(local.edges() == expected.edges());
  }
}

TEST_CASE("custom labels ride along with the records") {
  Graph g = path_graph(3);
  std::unordered_map<VertexId, std::int64_t> labels{{1, 100}, {2, 200}};
  auto rr = collect_ball(g, 1, labels);
  CHECK(rr.state_of(2).records.at(1).label == 100);
  CHECK(rr.state_of(2).records.at(3).label == 3);  // default: own id
}

TEST_CASE("step order shuffling never changes collection results") {
  Graph g = triangulation_graph(30, 9);
  auto plain = collect_ball(g, 2);
  for (std::uint64_t shuffle : {1, 2, 3}) {
    EngineOptions opt;
    opt.step_order_seed = shuffle;
    auto shuffled = collect_ball(g, 2, {}, opt);
    for (VertexId v : g.vertices()) {
      CHECK(shuffled.state_of(v).records == plain.state_of(v).records);
    }
  }
}

TEST_CASE("isomorphic balls produce isomorphic collection states") {
  using namespace testsup;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = triangulation_graph(26, seed);
    auto pi = random_permutation(g.vertices(), seed * 31);
    Graph h = apply_permutation(g, pi);
    auto rg = collect_ball(g, 2);
    auto rh = collect_ball(h, 2);
    for (VertexId v : g.vertices()) {
      CHECK(map_records(rg.state_of(v).records, pi) == rh.state_of(pi.at(v)).records);
    }
  }
}

TEST_CASE("edits outside the ball are invisible") {
  Graph g = grid_graph(5, 5);
  const VertexId center = 13;
  const std::int64_t radius = 2;
  auto dist = bfs_distances(g, center, -1);
  // connect two far corners: both endpoints lie outside the radius-2 ball
  REQUIRE(dist.at(1) > radius);
  REQUIRE(dist.at(25) > radius);
  EdgeList edges = g.edges();
  edges.push_back({1, 25});
  Graph h = Graph::from_edges(g.vertices(), edges);

  auto rg = collect_ball(g, radius);
  auto rh = collect_ball(h, radius);
  CHECK(rg.state_of(center).records == rh.state_of(center).records);
}

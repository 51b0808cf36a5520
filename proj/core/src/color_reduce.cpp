#include "plancol/color_reduce.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "plancol/errors.hpp"

namespace plancol {

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::int64_t f = 3; f * f <= x; f += 2) {
    if (x % f == 0) return false;
  }
  return true;
}

std::int64_t next_prime(std::int64_t x) {
  std::int64_t c = std::max<std::int64_t>(x, 2);
  while (!is_prime(c)) ++c;
  return c;
}

namespace {

std::int64_t bit_width_of(std::int64_t x) {
  return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(x)));
}

// q must stay below 2^31 so products fit in int64.
constexpr std::int64_t kMaxField = std::int64_t{1} << 31;

}  // namespace

std::optional<LinialStep> plan_linial_step(std::int64_t K, std::int64_t delta) {
  if (K < 2) return std::nullopt;
  const std::int64_t L = bit_width_of(K - 1);
  std::optional<LinialStep> best;
  for (std::int64_t d = 1; d <= L; ++d) {
    const std::int64_t w = (L + d) / (d + 1);  // ceil(L / (d+1))
    const std::int64_t floor_q = std::max(delta * d + 1, std::int64_t{1} << w);
    if (floor_q >= kMaxField) continue;
    const std::int64_t q = next_prime(floor_q);
    const std::int64_t out = q * q;
    if (out >= K) continue;
    if (!best || out < best->out_colors) best = LinialStep{q, d, w, K, out};
  }
  return best;
}

LinialPlan plan_linial_chain(std::int64_t K0, std::int64_t delta) {
  LinialPlan plan;
  std::int64_t K = K0;
  while (auto step = plan_linial_step(K, delta)) {
    plan.steps.push_back(*step);
    K = step->out_colors;
  }
  plan.final_colors = K;
  return plan;
}

namespace {

// Evaluate the polynomial whose coefficients are the bit chunks of `color`.
std::int64_t eval_chunks(const LinialStep& st, std::int64_t color, std::int64_t s) {
  const std::int64_t mask = (std::int64_t{1} << st.chunk_bits) - 1;
  std::int64_t acc = 0;
  std::int64_t power = 1;
  for (std::int64_t j = 0; j <= st.d; ++j) {
    const std::int64_t coeff = (color >> (j * st.chunk_bits)) & mask;
    acc = (acc + coeff % st.q * power) % st.q;
    power = power * s % st.q;
  }
  return acc;
}

}  // namespace

std::int64_t linial_recolor(const LinialStep& step, std::int64_t own,
                            std::span<const std::int64_t> neighbor_colors) {
  if (own < 0 || own >= step.in_colors) {
    throw PreconditionError("color " + std::to_string(own) + " outside space of " +
                            std::to_string(step.in_colors));
  }
  for (std::int64_t s = 0; s < step.q; ++s) {
    const std::int64_t mine = eval_chunks(step, own, s);
    bool clash = false;
    for (std::int64_t nb : neighbor_colors) {
      if (nb == own) {
        throw InternalCheckError("recoloring step saw a monochromatic edge");
      }
      if (eval_chunks(step, nb, s) == mine) {
        clash = true;
        break;
      }
    }
    if (!clash) return s * step.q + mine;
  }
  throw InternalCheckError("no distinguishing evaluation point; degree bound violated");
}

namespace {

// Wire codes for the reduction program.
constexpr std::int64_t kMsgColor = 0;  // [kMsgColor, current 0-based color]
constexpr std::int64_t kMsgFinal = 1;  // [kMsgFinal, final 1-based color]

struct ReduceProgram {
  const LinialPlan* plan = nullptr;
  int delta = 0;
  const std::unordered_map<VertexId, std::int64_t>* initial = nullptr;

  struct State {
    std::int64_t color = 0;  // 0-based, current space
    int final_color = 0;     // 1-based once settled
    std::unordered_map<VertexId, std::int64_t> nbr_color;  // current space
    std::unordered_map<VertexId, int> nbr_final;           // 1-based
  };

  std::int64_t steps() const { return static_cast<std::int64_t>(plan->steps.size()); }
  // Linial step t is computed at round 1+t; the last broadcast lands at
  // round steps()+2, which doubles as the first shrink slot.
  std::int64_t shrink_base() const { return steps() + 2; }

  State init(const VertexContext& ctx) const {
    State st;
    st.color = initial->at(ctx.id);
    return st;
  }

  // After the last reduction step: keep a small color, or book a shrink slot.
  void settle(State& st, StepIo& io) const {
    const std::int64_t current = st.color + 1;
    if (current <= delta + 1) {
      st.final_color = static_cast<int>(current);
      io.halt();
      return;
    }
    io.wake_at(shrink_round_for_class(shrink_base(), plan->final_colors, current));
  }

  void step(const VertexContext& ctx, std::int64_t round, State& st,
            std::span<const InboundMessage> inbox, StepIo& io) const {
    for (const auto& m : inbox) {
      if (m.payload[0] == kMsgColor) {
        st.nbr_color[m.from] = m.payload[1];
      } else {
        st.nbr_final[m.from] = static_cast<int>(m.payload[1]);
      }
    }
    if (ctx.degree() == 0) {
      st.final_color = 1;
      io.halt();
      return;
    }
    const std::int64_t S = steps();
    if (round == 1) {
      io.broadcast({kMsgColor, st.color});
      if (S == 0) {
        settle(st, io);
      } else {
        io.wake_at(2);
      }
      return;
    }
    if (round <= S + 1 && st.final_color == 0 && round - 2 < S) {
      std::vector<std::int64_t> nbrs;
      nbrs.reserve(ctx.neighbors.size());
      for (VertexId w : ctx.neighbors) nbrs.push_back(st.nbr_color.at(w));
      st.color = linial_recolor(plan->steps[static_cast<std::size_t>(round - 2)], st.color,
                                std::span<const std::int64_t>(nbrs));
      io.broadcast({kMsgColor, st.color});
      if (round == S + 1) {
        settle(st, io);
      } else {
        io.wake_at(round + 1);
      }
      return;
    }
    if (st.final_color != 0) return;
    const std::int64_t my_slot =
        shrink_round_for_class(shrink_base(), plan->final_colors, st.color + 1);
    if (round < my_slot) return;  // woken early by a neighbor's announcement
    // Own shrink slot: take the smallest color unused by any neighbor. A
    // neighbor that never recolored keeps its post-reduction color.
    std::set<int> used;
    for (VertexId w : ctx.neighbors) {
      auto f = st.nbr_final.find(w);
      if (f != st.nbr_final.end()) {
        used.insert(f->second);
        continue;
      }
      auto c = st.nbr_color.find(w);
      if (c != st.nbr_color.end() && c->second + 1 <= delta + 1) {
        used.insert(static_cast<int>(c->second + 1));
      }
    }
    int pick = 1;
    while (used.count(pick)) ++pick;
    if (pick > delta + 1) {
      throw InternalCheckError("no free color in the shrink phase; degree bound violated");
    }
    st.final_color = pick;
    io.broadcast({kMsgFinal, pick});
    io.halt();
  }
};

}  // namespace

ReduceResult reduce_colors(const Graph& g, int delta,
                           const std::unordered_map<VertexId, std::int64_t>& initial_ids,
                           EngineOptions options) {
  std::int64_t max_id = 0;
  std::set<std::int64_t> seen;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > delta) {
      throw InputError("vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)) + " above the bound " +
                       std::to_string(delta));
    }
    auto it = initial_ids.find(v);
    if (it == initial_ids.end()) {
      throw InputError("no initial id for vertex " + std::to_string(v));
    }
    if (it->second < 0) throw InputError("initial ids must be non-negative");
    if (!seen.insert(it->second).second) {
      throw InputError("initial ids are not injective (value " +
                       std::to_string(it->second) + ")");
    }
    max_id = std::max(max_id, it->second);
  }

  const LinialPlan plan = plan_linial_chain(max_id + 1, delta);
  ReduceProgram program{&plan, delta, &initial_ids};
  auto run_result = run(g, program, options);

  ReduceResult out;
  out.trace = std::move(run_result.trace);
  out.coloring.palette_size = delta + 1;
  for (VertexId v : g.vertices()) {
    const auto& st = run_result.state_of(v);
    if (st.final_color == 0) {
      throw InternalCheckError("vertex " + std::to_string(v) + " never settled on a color");
    }
    out.coloring.set(v, st.final_color);
  }
  return out;
}

}  // namespace plancol

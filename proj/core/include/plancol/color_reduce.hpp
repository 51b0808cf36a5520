#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "plancol/engine.hpp"
#include "plancol/graph.hpp"

namespace plancol {

// Deterministic color reduction in two phases:
//   1. Iterated polynomial recoloring: a color c with L bits is read as the
//      d+1 coefficients (bit chunks of width ceil(L/(d+1))) of a polynomial
//      over F_q. The vertex picks the smallest evaluation point s whose value
//      differs from every neighbor's polynomial at s and moves to color
//      s*q + p_c(s) < q^2. Distinct colors give distinct polynomials, which
//      collide on at most d points each, so q > delta*d guarantees s exists
//      and adjacent vertices never collide.
//   2. Once no step shrinks the space further, classes above delta+1 are
//      retired one scheduled round per class, each member taking the smallest
//      color unused by its neighbors.

bool is_prime(std::int64_t x);
std::int64_t next_prime(std::int64_t x);  // smallest prime >= max(x, 2)

struct LinialStep {
  std::int64_t q = 0;           // field size, prime
  std::int64_t d = 0;           // polynomial degree
  std::int64_t chunk_bits = 0;  // coefficient width
  std::int64_t in_colors = 0;   // input space size K, colors live in {0..K-1}
  std::int64_t out_colors = 0;  // q*q

  bool operator==(const LinialStep&) const = default;
};

// Cheapest valid step for color space K and max degree delta, or nullopt when
// no choice of d satisfies q^2 < K.
std::optional<LinialStep> plan_linial_step(std::int64_t K, std::int64_t delta);

struct LinialPlan {
  std::vector<LinialStep> steps;
  std::int64_t final_colors = 0;  // color space size after the last step
};
LinialPlan plan_linial_chain(std::int64_t K0, std::int64_t delta);

// One recoloring step for a single vertex, also used by tests as an oracle.
// own and neighbor colors are 0-based and must be pairwise distinct from own.
std::int64_t linial_recolor(const LinialStep& step, std::int64_t own,
                            std::span<const std::int64_t> neighbor_colors);

// Absolute engine round at which class `color` (1-based) recolors itself
// during the shrink phase; classes are retired from the top down.
inline std::int64_t shrink_round_for_class(std::int64_t shrink_base, std::int64_t total_colors,
                                           std::int64_t color) {
  return shrink_base + (total_colors - color);
}

struct ReduceResult {
  ColorAssignment coloring;  // palette delta+1, total
  RoundTrace trace;
};

// Runs the full reduction as a message-passing program on g. initial_ids must
// be injective; they seed the color space (K0 = max id + 1, globally derivable
// since ids are polynomially bounded). Proper input is implied by injectivity.
ReduceResult reduce_colors(const Graph& g, int delta,
                           const std::unordered_map<VertexId, std::int64_t>& initial_ids,
                           EngineOptions options = {});

}  // namespace plancol

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "plancol/engine.hpp"
#include "plancol/graph.hpp"

namespace plancol {

// Two recursive gadget families whose proper colorings are forced to repeat
// the base colors at the top level, although top and base are 2k apart. Any
// coloring program that cannot see across that distance can be fooled by
// relabeling, which is the substance of the linear-round lower bounds.

enum class GadgetFamily { planar4, outerplanar3 };

struct GadgetSpec {
  GadgetFamily family = GadgetFamily::planar4;
  std::int64_t k = 0;
};

struct GadgetBuild {
  Graph graph;
  std::map<std::string, VertexId> names;  // "v(i,j)" / "a(i)" construction names
  GadgetSpec spec;

  VertexId id(const std::string& name) const;
};

// planar4: levels add two blocks {a,b,c,v}(i,j); the triangle {a,b,c} is
// joined to v(i,j) and v(i-1,j). 8k+2 vertices. outerplanar3: levels add
// {a,b,c,d,v,u}(i); the edge a-b hangs between v(i) and v(i-1), c-d between
// u(i) and u(i-1). 6k+2 vertices. Ids follow construction order.
GadgetBuild build_gadget(GadgetSpec spec);

struct ColoringEnumeration {
  std::int64_t count = 0;
  bool complete = true;  // false: stopped at cap or by the visitor
};

// Exhaustive proper-coloring enumeration with colors {1..palette}, visiting
// assignments in lexicographic vertex/color order. The visitor may return
// false to stop. Intended for small graphs.
ColoringEnumeration exact_colorings(
    const Graph& g, int palette, std::int64_t cap,
    const std::function<bool(const ColorAssignment&)>& visit = nullptr);

// True when every proper palette-coloring of g agrees on each given pair.
// InputError if the enumeration would exceed `cap` colorings.
bool forcing_holds(const Graph& g, int palette,
                   const std::vector<std::pair<VertexId, VertexId>>& pairs, std::int64_t cap);

// Endpoint color forcing for the family (palette 4 for planar4, 3 for
// outerplanar3). Oracle budget limits k to 3 (planar4) and 4 (outerplanar3);
// larger k throws InputError.
bool forcing_check(const GadgetSpec& spec);

// BFS distance between the base and top named vertices equals 2k on each side.
bool distance_check(const GadgetSpec& spec);

// True when every s-t path passes through `cut`.
bool separates(const Graph& g, VertexId cut, VertexId s, VertexId t);

// A coloring program run under a fixed round horizon, with its trace kept so
// the experiment can verify the horizon was respected.
struct LocalRun {
  ColorAssignment coloring;
  RoundTrace trace;
};

using LocalColoringAlg = std::function<LocalRun(const Graph&)>;

// Heuristic 1: collect the radius-t ball and color by the rank of the own id
// among collected ids, folded into the palette.
LocalRun ball_rank_coloring(const Graph& g, std::int64_t t, int palette);

// Heuristic 2: collect the radius-t ball, greedily color it in id order, and
// fold the own color into the palette.
LocalRun greedy_ball_coloring(const Graph& g, std::int64_t t, int palette);

struct SwapVerdict {
  bool balls_disjoint = false;    // B_t around the two top vertices vs the two base ones
  bool base_proper = false;
  bool base_forced = false;
  bool swapped_proper = false;
  bool swapped_forced = false;

  // The relabeling argument guarantees every t-round program trips at least
  // one of the four checks.
  bool violation() const {
    return !(base_proper && base_forced && swapped_proper && swapped_forced);
  }
};

// Runs `alg` on the planar4 gadget under the construction ids and under the
// mirrored ids (levels swapped between the two blocks inside the radius-t
// balls around the top vertices), then checks properness and forcing on both.
// Requires t < k; an algorithm that sends messages after round t invalidates
// the experiment (InputError).
SwapVerdict swap_labeling_experiment(std::int64_t k, std::int64_t t,
                                     const LocalColoringAlg& alg);

}  // namespace plancol

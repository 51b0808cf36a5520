#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "plancol/engine.hpp"
#include "plancol/generators.hpp"
#include "plancol/graph.hpp"
#include "plancol/removable.hpp"

namespace testsup {

using namespace plancol;

// Random cactus of triangle / K4 / 5-cycle blocks glued at single vertices,
// at most two blocks per vertex. Degrees stay <= 6 and every cycle of length
// <= 10 is a block cycle (complete or odd), so nothing is removable: these
// graphs pass the charge procedure precondition as they are.
inline Graph cactus_graph(std::int64_t blocks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> vertices;
  EdgeList edges;
  std::map<VertexId, int> block_count;
  std::vector<VertexId> attachable;
  VertexId next = 1;

  auto fresh = [&]() {
    vertices.push_back(next);
    block_count[next] = 0;
    return next++;
  };
  auto enroll = [&](VertexId v) {
    if (++block_count[v] < 2) {
      attachable.push_back(v);
    } else {
      attachable.erase(std::remove(attachable.begin(), attachable.end(), v), attachable.end());
    }
  };

  for (std::int64_t b = 0; b < blocks; ++b) {
    VertexId base;
    if (attachable.empty()) {
      base = fresh();
    } else {
      base = attachable[uniform_below(rng, attachable.size())];
    }
    switch (uniform_below(rng, 3)) {
      case 0: {  // triangle
        VertexId x = fresh(), y = fresh();
        edges.insert(edges.end(), {{base, x}, {x, y}, {y, base}});
        enroll(base), enroll(x), enroll(y);
        break;
      }
      case 1: {  // K4
        VertexId x = fresh(), y = fresh(), z = fresh();
        edges.insert(edges.end(),
                     {{base, x}, {base, y}, {base, z}, {x, y}, {x, z}, {y, z}});
        enroll(base), enroll(x), enroll(y), enroll(z);
        break;
      }
      default: {  // 5-cycle
        VertexId w = fresh(), x = fresh(), y = fresh(), z = fresh();
        edges.insert(edges.end(), {{base, w}, {w, x}, {x, y}, {y, z}, {z, base}});
        enroll(base), enroll(w), enroll(x), enroll(y), enroll(z);
        break;
      }
    }
  }
  return Graph::from_edges(std::move(vertices), edges);
}

// A host graph with one removable cycle (length 4..10, chords as needed, all
// cycle degrees <= 6) plus colored pendant vertices around it. Such inputs
// always admit a proper completion; instances feed both extend_on_cycle and
// the brute force existence oracle.
struct ExtensionInstance {
  Graph g;
  Cycle cycle;
  ColorAssignment partial;  // proper, every cycle vertex uncolored
  int delta = 6;
};

inline ExtensionInstance extension_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t len = 4 + static_cast<std::int64_t>(uniform_below(rng, 7));

  ExtensionInstance inst;
  inst.cycle.sequence.resize(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) inst.cycle.sequence[i] = i + 1;

  std::vector<VertexId> vertices(inst.cycle.sequence);
  EdgeList edges;
  std::map<VertexId, std::int64_t> degree;
  auto link = [&](VertexId u, VertexId v) {
    edges.push_back({u, v});
    ++degree[u], ++degree[v];
  };
  for (std::int64_t i = 0; i < len; ++i) link(i + 1, i + 1 == len ? 1 : i + 2);

  // Chords keep the induced cycle graph away from the two non-removable
  // shapes: odd holes need at least one, complete graphs would need all.
  std::int64_t chords = uniform_below(rng, 2);
  if (len % 2 == 1) chords = 1 + uniform_below(rng, 2);
  if (len == 4) chords = std::min<std::int64_t>(chords, 1);
  std::set<std::pair<VertexId, VertexId>> present;
  for (auto [u, v] : edges) present.insert({std::min(u, v), std::max(u, v)});
  for (std::int64_t c = 0; c < chords;) {
    VertexId u = 1 + static_cast<VertexId>(uniform_below(rng, len));
    VertexId v = 1 + static_cast<VertexId>(uniform_below(rng, len));
    if (u > v) std::swap(u, v);
    if (u == v || present.count({u, v})) continue;
    present.insert({u, v});
    link(u, v);
    ++c;
  }

  VertexId next = len + 1;
  inst.partial.palette_size = inst.delta;
  for (std::int64_t i = 0; i < len; ++i) {
    std::int64_t pendants = uniform_below(rng, 3);
    for (std::int64_t p = 0; p < pendants && degree[i + 1] < inst.delta; ++p) {
      VertexId x = next++;
      vertices.push_back(x);
      link(i + 1, x);
      // a second anchor for some pendants, degree permitting
      VertexId other = (i + 1) % len + 1;
      if (uniform_below(rng, 2) == 0 && degree[other] < inst.delta) link(other, x);
      if (uniform_below(rng, 4) != 0) {
        inst.partial.set(x, 1 + static_cast<int>(uniform_below(rng, inst.delta)));
      }
    }
  }
  inst.g = Graph::from_edges(std::move(vertices), edges);
  return inst;
}

// Does any proper assignment of {1..delta} to the cycle vertices extend the
// instance's partial coloring? Exhaustive, via list coloring of the induced
// cycle graph against the colored neighborhood.
inline bool extension_exists_oracle(const ExtensionInstance& inst) {
  std::map<VertexId, std::vector<int>> allowed;
  for (VertexId v : inst.cycle.sequence) {
    std::set<int> banned;
    for (VertexId w : inst.g.neighbors(v)) {
      if (int c = inst.partial.color_of(w); c != 0) banned.insert(c);
    }
    auto& list = allowed[v];
    for (int c = 1; c <= inst.delta; ++c) {
      if (!banned.count(c)) list.push_back(c);
    }
  }
  Graph induced = induced_subgraph(inst.g, inst.cycle.canonical_key());
  return color_with_lists(induced, allowed).has_value();
}

// --- locality helpers ------------------------------------------------------

inline std::unordered_map<VertexId, VertexId> random_permutation(const std::vector<VertexId>& ids,
                                                                 std::uint64_t seed) {
  std::vector<VertexId> image(ids);
  std::mt19937_64 rng(seed);
  for (std::size_t i = image.size(); i > 1; --i) {
    std::swap(image[i - 1], image[uniform_below(rng, i)]);
  }
  std::unordered_map<VertexId, VertexId> pi;
  for (std::size_t i = 0; i < ids.size(); ++i) pi[ids[i]] = image[i];
  return pi;
}

inline Graph apply_permutation(const Graph& g, const std::unordered_map<VertexId, VertexId>& pi) {
  std::vector<VertexId> vertices;
  for (VertexId v : g.vertices()) vertices.push_back(pi.at(v));
  EdgeList edges;
  for (auto [u, v] : g.edges()) edges.push_back({pi.at(u), pi.at(v)});
  return Graph::from_edges(std::move(vertices), edges);
}

// Ball records mapped through a vertex permutation; labels ride along because
// the default collection labels every vertex with its own id.
inline std::map<VertexId, BallRecord> map_records(const std::map<VertexId, BallRecord>& records,
                                                  const std::unordered_map<VertexId, VertexId>& pi) {
  std::map<VertexId, BallRecord> out;
  for (const auto& [id, rec] : records) {
    BallRecord mapped;
    mapped.label = pi.at(rec.label);
    for (VertexId w : rec.neighbors) mapped.neighbors.push_back(pi.at(w));
    std::sort(mapped.neighbors.begin(), mapped.neighbors.end());
    out[pi.at(id)] = std::move(mapped);
  }
  return out;
}

}  // namespace testsup

#pragma once

#include <cstdint>
#include <random>

#include "plancol/graph.hpp"

namespace plancol {

// Uniform integer in [0, bound) by rejection from the raw 64-bit stream.
// std::uniform_int_distribution is implementation defined, so seeded outputs
// would differ between standard libraries; this keeps generated graphs
// byte-identical everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// rows x cols lattice, ids row-major starting at 1. Bipartite, planar.
Graph grid_graph(std::int64_t rows, std::int64_t cols);

// Brick-wall variant of the lattice: all horizontal edges, vertical edges only
// where (row + col) is even. Max degree 3, girth 6, planar.
Graph hex_grid_graph(std::int64_t rows, std::int64_t cols);

// Random stacked triangulation: start from a triangle, repeatedly split a
// uniformly chosen face with a fresh vertex. Maximal planar, 3n - 6 edges.
Graph triangulation_graph(std::int64_t n, std::uint64_t seed);

// Subdivide every edge of a random stacked triangulation once. Triangle-free
// planar with girth 6. Sizes live on the lattice 4m - 6, so the result has the
// smallest admissible vertex count >= target_n; callers read the actual size
// off the returned graph.
Graph subdivided_triangulation_graph(std::int64_t target_n, std::uint64_t seed);

// Hub vertex 1 joined to the path 2..n. Maximal outerplanar.
Graph outerplanar_fan_graph(std::int64_t n);

// Random triangulation of the convex polygon 1..n via recursive ear splits.
// Maximal outerplanar, 2n - 3 edges.
Graph maximal_outerplanar_graph(std::int64_t n, std::uint64_t seed);

Graph path_graph(std::int64_t n);
Graph cycle_graph(std::int64_t n);
Graph complete_graph(std::int64_t k);

}  // namespace plancol

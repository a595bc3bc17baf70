#pragma once

#include <cstddef>
#include <vector>

#include "gbh/abelian.hpp"
#include "gbh/graph.hpp"
#include "gbh/int_matrix.hpp"

namespace gbh {

inline constexpr std::size_t kDefaultCellBudget = 2'000'000;

// Cube complex of the discretized n-particle model: cells are sets of n
// pairwise disjoint closed cells of the graph (no chosen edge touches
// another chosen cell); dimension = number of chosen edges.
struct DiscreteComplex {
  int particles = 0;
  std::vector<std::size_t> cells_per_dim;  // d = 0..particles
  std::vector<IntegerMatrix> boundaries;   // boundaries[d] : C_d -> C_{d-1}
};

// Requires the graph to be sufficiently subdivided for n particles
// (pairwise essential-vertex distance and girth at least n+1 when n >= 2).
DiscreteComplex discretized_complex(const Graph& g, int n, std::size_t budget = kDefaultCellBudget);

// H_q(UF_n(G)): subdivides every edge into n+1 segments, then takes
// cellular homology of the discretized complex.
AbelianGroup oracle_homology(const Graph& g, int n, int q, std::size_t budget = kDefaultCellBudget);

}  // namespace gbh

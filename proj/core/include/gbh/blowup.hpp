#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbh/graph.hpp"
#include "gbh/homology.hpp"
#include "gbh/int_matrix.hpp"
#include "gbh/swiatkowski.hpp"

namespace gbh {

// Blow-up at a vertex: v is replaced by one degree-1 vertex per half-edge,
// named "{v}x{edge}". Edge ids are unchanged.
struct Blowup {
  Graph original;
  std::string vertex;
  Graph result;
  std::map<std::string, std::string> half_edge_vertex_map;  // edge id at v -> new vertex id
};

Blowup blow_up(const Graph& g, const std::string& vertex_id);

// H~(v): the span of half-edge differences at v in the canonical anchored
// basis h_i - h_0, of rank mu(v) - 1.
struct HalfEdgeDifferences {
  std::string vertex;
  int anchor_edge = -1;
  std::vector<int> basis_edges;  // non-anchor incident edges, ascending

  int rank() const { return static_cast<int>(basis_edges.size()); }
};

HalfEdgeDifferences half_edge_differences(const Graph& g, const std::string& vertex_id);

// The short exact sequence of reduced complexes at one bigrade:
//   0 -> Sw~(Bl_v G)_(q,n) -> Sw~(G)_(q,n) -> H~(v) (x) Sw~(Bl_v G)_(q-1,n-1) -> 0
// Quotient rows are indexed (difference index) * dim + (blow-up basis index).
struct SesMatrices {
  int q = 0;
  int n = 0;
  int dim_sub = 0;
  int dim_mid = 0;
  int dim_quot = 0;
  IntegerMatrix inclusion;   // dim_mid x dim_sub
  IntegerMatrix projection;  // dim_quot x dim_mid
};

SesMatrices ses_matrices(const Graph& g, const std::string& vertex_id, int q, int n);
SesMatrices ses_matrices(const SwComplex& full, const SwComplex& blown, const Blowup& bl, int q,
                         int n);

struct LesEntry {
  int q = 0;
  int n = 0;
  int dim_sub = 0;
  int dim_mid = 0;
  int dim_quot = 0;
  bool exact = false;
};

struct LesWeight {
  int n = 0;
  std::vector<long> betti_graph;    // dim H_q(G)_n, q = 0..n
  std::vector<long> betti_blowup;   // dim H_q(Bl)_n
  bool alternating_sum_zero = false;
  bool segments_consistent = false;
};

struct LesReport {
  std::string vertex;
  int mu = 0;
  std::vector<LesEntry> exactness;
  std::vector<LesWeight> weights;
  bool ok = false;
};

// degreewise SES exactness plus long-exact-sequence rank bookkeeping
LesReport verify_les(const Graph& g, const std::string& vertex_id, int q_max, int n_max,
                     const FieldTag& field);

// The star-family worked computation: the kernel of
//   S^{(n-1,1)} (x) A{1} -> m_n,  (e_i - e_j) (x) 1 |-> x_i - x_j
// is generated in degree 3 (generators in degree 2 of the homology
// grading), contains the classical three-term cyclic element, and matches
// H_1 of the star graph degree by degree.
struct StarRegressionRow {
  int n = 0;
  bool cyclic_element_in_kernel = false;
  std::map<int, long> kernel_new_generators;  // degree -> count of minimal generators
  long kernel_dim_degree3 = 0;
  long h1_weight2 = 0;                         // dim H_1(UF_2(K_{n,1}))
  std::map<int, long> h1_generator_degrees;
  bool ok = false;
};

struct StarRegressionReport {
  std::vector<StarRegressionRow> rows;  // n = 3, 4, 5
  bool ok = false;
};

StarRegressionReport star_example_regression();

}  // namespace gbh

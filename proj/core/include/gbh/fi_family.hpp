#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gbh/graded_module.hpp"
#include "gbh/graph.hpp"
#include "gbh/homology.hpp"

namespace gbh {

// Edge-linear family in gluing normal form: G_n is `base` with n copies of
// `copy` glued along the common subgraph `overlap`. The symmetric group
// permutes the copies and fixes the base.
struct FIGraphFamily {
  Graph base;
  Graph copy;
  Graph overlap;
  std::map<std::string, std::string> embed_base;  // overlap vertex -> base vertex
  std::map<std::string, std::string> embed_copy;  // overlap vertex -> copy vertex
  int n_min = 0;
};

// validates the two embeddings (total, adjacency-preserving, injective)
FIGraphFamily make_family(Graph base, Graph copy, Graph overlap,
                          std::map<std::string, std::string> embed_base,
                          std::map<std::string, std::string> embed_copy, int n_min = 0);

// G_n; copy-i vertices and edges are named "copy{i}:{id}"
Graph evaluate(const FIGraphFamily& family, int n);

struct Transition {
  std::shared_ptr<const Graph> source;  // G_n
  std::shared_ptr<const Graph> target;  // G_r
  GraphHom hom;                         // references *source and *target
};

// induced injective homomorphism G_n -> G_r for an injection f (1-based
// images, f[i-1] = f(i))
Transition transition(const FIGraphFamily& family, const std::vector<int>& f, int r);

struct LinearPolynomial {
  long a = 0;  // value a*n + b
  long b = 0;
  bool operator==(const LinearPolynomial&) const = default;
};

// fits |E(G_n)| = a*n + b on the first two window points, verifies the rest
LinearPolynomial edge_count_check(const FIGraphFamily& family, const std::vector<int>& window);

struct StabilizationReport {
  std::string target;
  std::vector<int> n_values;
  bool stabilized = false;

  // polynomial target
  std::vector<long> values;
  std::vector<mpq_class> polynomial;            // coefficients, ascending power
  std::vector<std::pair<int, bool>> holdouts;   // (n, fitted value matched)

  // support target
  std::vector<std::set<int>> supports;  // per n
  std::set<int> stable_support;         // value on the trailing run
  int stable_run = 0;                   // length of the trailing constant run
};

// beta_{p,j}(H_q(G_n; k)) for each n in ns
std::vector<long> betti_sequence(const FIGraphFamily& family, int q, int p, int j,
                                 const std::vector<int>& ns, const FieldTag& field,
                                 unsigned jobs = 1);

// exact finite-difference fit on the trailing max_degree+1 points, checked
// against two holdout points; non-fit is a status, not an error
StabilizationReport detect_polynomial(const std::vector<long>& seq, const std::vector<int>& ns,
                                      int max_degree);

StabilizationReport support_stabilization(const FIGraphFamily& family, int q, int p,
                                          const std::vector<int>& ns, int j_max,
                                          const FieldTag& field, unsigned jobs = 1);

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coeffs, long x);

}  // namespace gbh

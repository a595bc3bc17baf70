#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gbh/graph.hpp"
#include "gbh/int_matrix.hpp"

namespace gbh {

// One tensor factor of a pure tensor. In the full complex a vertex is
// Empty, Gen (the vertex generator) or Half (a half-edge at the vertex).
// The reduced complex replaces Gen/Half by Diff, the difference between a
// half-edge and the canonical anchor (the incident edge of smallest id).
struct VertexState {
  enum class Kind : unsigned char { Empty, Gen, Half, Diff };
  Kind kind = Kind::Empty;
  int edge = -1;    // Half: the half-edge's edge; Diff: the non-anchor edge
  int anchor = -1;  // Diff only

  auto operator<=>(const VertexState&) const = default;
};

struct PureTensor {
  std::vector<int> monomial;        // exponent per edge index
  std::vector<VertexState> states;  // one per vertex index

  int homological_degree() const;
  int weight() const;

  auto operator<=>(const PureTensor&) const = default;
};

// Basis of one bigrade (q, n), ordered (monomial, states) lexicographically.
struct BigradeSlice {
  int q = 0;
  int n = 0;
  bool reduced = false;
  const Graph* graph = nullptr;
  std::vector<PureTensor> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const PureTensor& t) const;  // -1 if absent
};

BigradeSlice enumerate_basis(const Graph& g, int q, int n, bool reduced);

// d : (q,n) -> (q-1,n). Rows are indexed by `to`, columns by `from`.
IntegerMatrix boundary_matrix(const BigradeSlice& from, const BigradeSlice& to);

// multiplication by x_e : (q,n) -> (q,n+1)
IntegerMatrix edge_action_matrix(const BigradeSlice& from, const BigradeSlice& to, int edge);

// expansion of the reduced basis into the full one at the same bigrade
IntegerMatrix inclusion_matrix(const BigradeSlice& reduced_slice, const BigradeSlice& full_slice);

// basis map induced by an injective graph homomorphism (same q, n, mode)
IntegerMatrix induced_chain_map(const GraphHom& phi, const BigradeSlice& src, const BigradeSlice& dst);

void dump_matrix(std::ostream& os, const std::string& graph_label, const BigradeSlice& slice,
                 const IntegerMatrix& m);

// Lazily enumerated complex for a fixed graph and mode. Slice and boundary
// construction are memoized; the cache tolerates concurrent readers.
class SwComplex {
 public:
  SwComplex(Graph g, bool reduced);

  const Graph& graph() const { return graph_; }
  bool reduced() const { return reduced_; }

  const BigradeSlice& slice(int q, int n) const;
  const IntegerMatrix& boundary(int q, int n) const;
  IntegerMatrix edge_action(int q, int n, int edge) const;

 private:
  Graph graph_;
  bool reduced_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<BigradeSlice>> slices_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<IntegerMatrix>> boundaries_;
};

}  // namespace gbh

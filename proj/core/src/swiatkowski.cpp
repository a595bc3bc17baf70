#include "gbh/swiatkowski.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace gbh {

int PureTensor::homological_degree() const {
  int q = 0;
  for (const auto& s : states)
    if (s.kind == VertexState::Kind::Half || s.kind == VertexState::Kind::Diff) ++q;
  return q;
}

int PureTensor::weight() const {
  int n = 0;
  for (int e : monomial) n += e;
  for (const auto& s : states) {
    if (s.kind != VertexState::Kind::Empty) ++n;
  }
  return n;
}

int BigradeSlice::index_of(const PureTensor& t) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), t);
  if (it == basis.end() || !(*it == t)) return -1;
  return static_cast<int>(it - basis.begin());
}

namespace {

void enumerate_monomials(int edges, int degree, std::vector<int>& mono,
                         const std::function<void()>& emit, int from = 0) {
  if (edges == 0) {
    if (degree == 0) emit();
    return;
  }
  if (from == edges - 1) {
    mono[from] = degree;
    emit();
    mono[from] = 0;
    return;
  }
  for (int d = 0; d <= degree; ++d) {
    mono[from] = d;
    enumerate_monomials(edges, degree - d, mono, emit, from + 1);
  }
  mono[from] = 0;
}

void enumerate_states(const Graph& g, bool reduced, int v, int q_left, int weight_left,
                      std::vector<VertexState>& states, const std::function<void(int)>& emit) {
  if (v == g.vertex_count()) {
    if (q_left == 0) emit(weight_left);
    return;
  }
  // remaining vertices cannot supply more homological degree than their count
  if (q_left > g.vertex_count() - v) return;

  states[v] = {VertexState::Kind::Empty, -1, -1};
  enumerate_states(g, reduced, v + 1, q_left, weight_left, states, emit);

  if (weight_left > 0) {
    const auto& inc = g.incident_edges(v);
    if (!reduced) {
      states[v] = {VertexState::Kind::Gen, -1, -1};
      enumerate_states(g, reduced, v + 1, q_left, weight_left - 1, states, emit);
      if (q_left > 0)
        for (int e : inc) {
          states[v] = {VertexState::Kind::Half, e, -1};
          enumerate_states(g, reduced, v + 1, q_left - 1, weight_left - 1, states, emit);
        }
    } else if (q_left > 0 && inc.size() >= 2) {
      int anchor = inc.front();
      for (size_t i = 1; i < inc.size(); ++i) {
        states[v] = {VertexState::Kind::Diff, inc[i], anchor};
        enumerate_states(g, reduced, v + 1, q_left - 1, weight_left - 1, states, emit);
      }
    }
  }
  states[v] = {VertexState::Kind::Empty, -1, -1};
}

}  // namespace

BigradeSlice enumerate_basis(const Graph& g, int q, int n, bool reduced) {
  if (reduced && g.has_isolated_vertex())
    fail(Errc::IsolatedVertexInReducedMode, "reduced complex requires no isolated vertices");
  BigradeSlice slice;
  slice.q = q;
  slice.n = n;
  slice.reduced = reduced;
  slice.graph = &g;
  if (q < 0 || n < 0 || q > n) return slice;

  std::vector<VertexState> states(g.vertex_count());
  std::vector<int> mono(g.edge_count(), 0);
  enumerate_states(g, reduced, 0, q, n, states, [&](int mono_degree) {
    enumerate_monomials(g.edge_count(), mono_degree, mono, [&] {
      slice.basis.push_back({mono, states});
    });
  });
  std::sort(slice.basis.begin(), slice.basis.end());
  return slice;
}

namespace {

void require_compatible(const BigradeSlice& a, const BigradeSlice& b, const char* what) {
  if (a.graph == nullptr || b.graph == nullptr || a.reduced != b.reduced ||
      !(a.graph == b.graph || *a.graph == *b.graph))
    fail(Errc::SliceMismatch, what);
}

}  // namespace

IntegerMatrix boundary_matrix(const BigradeSlice& from, const BigradeSlice& to) {
  require_compatible(from, to, "boundary slices disagree on graph or mode");
  if (from.n != to.n || to.q != from.q - 1)
    fail(Errc::SliceMismatch, "boundary requires equal weight and homological degrees q, q-1");

  std::vector<Triplet> trips;
  for (int col = 0; col < from.dim(); ++col) {
    const PureTensor& t = from.basis[col];
    int odd_before = 0;
    for (size_t v = 0; v < t.states.size(); ++v) {
      const VertexState& s = t.states[v];
      if (s.kind != VertexState::Kind::Half && s.kind != VertexState::Kind::Diff) continue;
      int sign = odd_before % 2 == 0 ? 1 : -1;
      ++odd_before;

      PureTensor term = t;
      term.states[v] = {VertexState::Kind::Empty, -1, -1};
      term.monomial[s.edge] += 1;
      int r = to.index_of(term);
      trips.push_back({r, col, sign});
      term.monomial[s.edge] -= 1;

      if (s.kind == VertexState::Kind::Half) {
        term.states[v] = {VertexState::Kind::Gen, -1, -1};
        r = to.index_of(term);
        trips.push_back({r, col, -sign});
      } else {
        term.monomial[s.anchor] += 1;
        r = to.index_of(term);
        trips.push_back({r, col, -sign});
      }
    }
  }
  for (const auto& t : trips)
    if (t.row < 0) fail(Errc::SliceMismatch, "boundary target basis is incomplete");
  return IntegerMatrix::from_triplets(to.dim(), from.dim(), std::move(trips));
}

IntegerMatrix edge_action_matrix(const BigradeSlice& from, const BigradeSlice& to, int edge) {
  require_compatible(from, to, "edge action slices disagree on graph or mode");
  if (from.q != to.q || to.n != from.n + 1)
    fail(Errc::SliceMismatch, "edge action requires equal q and weights n, n+1");
  if (edge < 0 || edge >= from.graph->edge_count()) fail(Errc::UnknownEdge, "edge index out of range");

  std::vector<Triplet> trips;
  for (int col = 0; col < from.dim(); ++col) {
    PureTensor term = from.basis[col];
    term.monomial[edge] += 1;
    int r = to.index_of(term);
    if (r < 0) fail(Errc::SliceMismatch, "edge action target basis is incomplete");
    trips.push_back({r, col, 1});
  }
  return IntegerMatrix::from_triplets(to.dim(), from.dim(), std::move(trips));
}

IntegerMatrix inclusion_matrix(const BigradeSlice& reduced_slice, const BigradeSlice& full_slice) {
  if (reduced_slice.graph == nullptr || full_slice.graph == nullptr ||
      !reduced_slice.reduced || full_slice.reduced ||
      !(reduced_slice.graph == full_slice.graph || *reduced_slice.graph == *full_slice.graph) ||
      reduced_slice.q != full_slice.q || reduced_slice.n != full_slice.n)
    fail(Errc::SliceMismatch, "inclusion requires reduced and full slices at one bigrade");

  std::vector<Triplet> trips;
  for (int col = 0; col < reduced_slice.dim(); ++col) {
    const PureTensor& t = reduced_slice.basis[col];
    std::vector<int> diff_positions;
    for (size_t v = 0; v < t.states.size(); ++v)
      if (t.states[v].kind == VertexState::Kind::Diff) diff_positions.push_back(static_cast<int>(v));

    int k = static_cast<int>(diff_positions.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      PureTensor term = t;
      int sign = 1;
      for (int i = 0; i < k; ++i) {
        const VertexState& s = t.states[diff_positions[i]];
        bool take_anchor = (mask >> i) & 1;
        term.states[diff_positions[i]] = {VertexState::Kind::Half,
                                          take_anchor ? s.anchor : s.edge, -1};
        if (take_anchor) sign = -sign;
      }
      int r = full_slice.index_of(term);
      if (r < 0) fail(Errc::SliceMismatch, "full basis is incomplete");
      trips.push_back({r, col, sign});
    }
  }
  return IntegerMatrix::from_triplets(full_slice.dim(), reduced_slice.dim(), std::move(trips));
}

namespace {

// sign of the permutation the vertex map induces on the odd tensor factors
int odd_permutation_sign(const PureTensor& t, const GraphHom& phi) {
  std::vector<int> images;
  for (size_t v = 0; v < t.states.size(); ++v) {
    const auto k = t.states[v].kind;
    if (k == VertexState::Kind::Half || k == VertexState::Kind::Diff)
      images.push_back(phi.vertex_map[v]);
  }
  int inversions = 0;
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

IntegerMatrix induced_chain_map(const GraphHom& phi, const BigradeSlice& src,
                                const BigradeSlice& dst) {
  if (!phi.injective) fail(Errc::NotInjective, "induced chain maps require injective homomorphisms");
  if (src.graph == nullptr || dst.graph == nullptr || src.reduced != dst.reduced ||
      src.q != dst.q || src.n != dst.n)
    fail(Errc::SliceMismatch, "induced map requires equal bigrade and mode");
  if (!(*src.graph == *phi.source) || !(*dst.graph == *phi.target))
    fail(Errc::SliceMismatch, "slices do not match the homomorphism endpoints");

  const Graph& h = *dst.graph;
  std::vector<Triplet> trips;
  for (int col = 0; col < src.dim(); ++col) {
    const PureTensor& t = src.basis[col];
    int base_sign = odd_permutation_sign(t, phi);

    PureTensor image;
    image.monomial.assign(h.edge_count(), 0);
    image.states.assign(h.vertex_count(), {});
    for (int e = 0; e < src.graph->edge_count(); ++e)
      image.monomial[phi.edge_map[e]] += t.monomial[e];

    // Diff states need re-anchoring at the image vertex; each contributes
    // up to two signed terms, collected by subset expansion.
    struct DiffTerm {
      int vertex;
      int plus_edge;   // -1 when the image difference degenerates
      int minus_edge;  // -1 likewise
    };
    std::vector<DiffTerm> diffs;
    for (size_t v = 0; v < t.states.size(); ++v) {
      const VertexState& s = t.states[v];
      int w = phi.vertex_map[v];
      switch (s.kind) {
        case VertexState::Kind::Empty:
          break;
        case VertexState::Kind::Gen:
          image.states[w] = {VertexState::Kind::Gen, -1, -1};
          break;
        case VertexState::Kind::Half:
          image.states[w] = {VertexState::Kind::Half, phi.edge_map[s.edge], -1};
          break;
        case VertexState::Kind::Diff: {
          int anchor_w = h.incident_edges(w).front();
          int ei = phi.edge_map[s.edge];
          int ej = phi.edge_map[s.anchor];
          diffs.push_back({w, ei == anchor_w ? -1 : ei, ej == anchor_w ? -1 : ej});
          break;
        }
      }
    }

    int k = static_cast<int>(diffs.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      PureTensor term = image;
      int sign = base_sign;
      bool zero = false;
      for (int i = 0; i < k && !zero; ++i) {
        bool minus_part = (mask >> i) & 1;
        int edge = minus_part ? diffs[i].minus_edge : diffs[i].plus_edge;
        if (minus_part) sign = -sign;
        if (edge < 0) {
          zero = true;  // the anchor difference vanishes
          break;
        }
        int anchor_w = h.incident_edges(diffs[i].vertex).front();
        term.states[diffs[i].vertex] = {VertexState::Kind::Diff, edge, anchor_w};
      }
      if (zero) continue;
      int r = dst.index_of(term);
      if (r < 0) fail(Errc::SliceMismatch, "image basis is incomplete");
      trips.push_back({r, col, sign});
    }
  }
  return IntegerMatrix::from_triplets(dst.dim(), src.dim(), std::move(trips));
}

void dump_matrix(std::ostream& os, const std::string& graph_label, const BigradeSlice& slice,
                 const IntegerMatrix& m) {
  os << "# graph=" << graph_label << " q=" << slice.q << " n=" << slice.n
     << " mode=" << (slice.reduced ? "reduced" : "full") << " rows=" << m.rows()
     << " cols=" << m.cols() << "\n";
  for (const auto& t : m.entries()) os << t.row << " " << t.col << " " << t.value << "\n";
}

SwComplex::SwComplex(Graph g, bool reduced) : graph_(std::move(g)), reduced_(reduced) {
  if (reduced_ && graph_.has_isolated_vertex())
    fail(Errc::IsolatedVertexInReducedMode, "reduced complex requires no isolated vertices");
}

const BigradeSlice& SwComplex::slice(int q, int n) const {
  std::scoped_lock lock(mu_);
  auto key = std::pair{q, n};
  auto it = slices_.find(key);
  if (it == slices_.end()) {
    auto s = std::make_unique<BigradeSlice>(enumerate_basis(graph_, q, n, reduced_));
    s->graph = &graph_;
    it = slices_.emplace(key, std::move(s)).first;
  }
  return *it->second;
}

const IntegerMatrix& SwComplex::boundary(int q, int n) const {
  const BigradeSlice& from = slice(q, n);
  const BigradeSlice& to = slice(q - 1, n);
  std::scoped_lock lock(mu_);
  auto key = std::pair{q, n};
  auto it = boundaries_.find(key);
  if (it == boundaries_.end())
    it = boundaries_.emplace(key, std::make_unique<IntegerMatrix>(boundary_matrix(from, to))).first;
  return *it->second;
}

IntegerMatrix SwComplex::edge_action(int q, int n, int edge) const {
  return edge_action_matrix(slice(q, n), slice(q, n + 1), edge);
}

}  // namespace gbh

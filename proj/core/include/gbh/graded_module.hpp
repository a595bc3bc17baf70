#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbh/field.hpp"
#include "gbh/homology.hpp"
#include "gbh/swiatkowski.hpp"

namespace gbh {

long long binomial(int n, int k);

// Quotient coordinates of one homology degree: representatives plus the
// machinery to express an arbitrary cycle in the representative basis.
template <typename F>
struct ModuleDegree {
  int slice_dim = 0;
  DenseMatrix<F> reps;  // slice_dim x dims[j]

  // image-free fast path: coordinates are read at the kernel free rows
  bool image_free = false;
  std::vector<int> free_rows;

  std::optional<ColumnSolver<F>> solver;  // over [image | kernel basis]
  std::vector<int> rep_positions;         // stacked-column index per representative

  std::vector<typename F::Elem> coordinates(std::vector<typename F::Elem> w) const {
    std::vector<typename F::Elem> out;
    out.reserve(rep_positions.size() + free_rows.size());
    if (image_free) {
      for (int r : free_rows) out.push_back(w[r]);
      return out;
    }
    auto x = solver->solve(std::move(w));
    if (!x) fail(Errc::ExactnessFailure, "cycle fell outside the expected homology lattice");
    for (int c : rep_positions) out.push_back((*x)[c]);
    return out;
  }
};

// Degreewise-truncated graded module over the edge polynomial ring:
// dimension per weight plus one action matrix per edge per weight.
template <typename F>
struct GradedModule {
  explicit GradedModule(F f) : field(std::move(f)) {}

  F field;
  std::vector<std::string> edge_ids;
  int truncation = 0;
  std::vector<long> dims;                           // j = 0..N
  std::vector<std::vector<DenseMatrix<F>>> actions; // [edge][j] : M_j -> M_{j+1}
  std::vector<ModuleDegree<F>> degrees;

  int edge_count() const { return static_cast<int>(edge_ids.size()); }
};

template <typename F>
std::vector<typename F::Elem> apply_sparse(const IntegerMatrix& m,
                                           const std::vector<typename F::Elem>& v, const F& field) {
  std::vector<typename F::Elem> out(m.rows(), field.zero());
  for (const auto& t : m.entries())
    out[t.row] = field.add(out[t.row], field.mul(field.from_mpz(t.value), v[t.col]));
  return out;
}

template <typename F>
GradedModule<F> truncated_module(const SwComplex& complex, int q, int truncation, const F& field) {
  if (truncation < 0) fail(Errc::TruncationTooSmall, "truncation must be nonnegative");
  GradedModule<F> m{field};
  for (const auto& e : complex.graph().edges()) m.edge_ids.push_back(e.id);
  m.truncation = truncation;
  m.dims.resize(truncation + 1, 0);
  m.degrees.resize(truncation + 1);

  for (int j = 0; j <= truncation; ++j) {
    ModuleDegree<F>& deg = m.degrees[j];
    deg.slice_dim = complex.slice(q, j).dim();
    if (deg.slice_dim == 0) continue;

    auto d_out = DenseMatrix<F>::from_integer(complex.boundary(q, j), field);
    std::vector<int> free_rows;
    DenseMatrix<F> kernel = kernel_basis(std::move(d_out), field, &free_rows);

    const IntegerMatrix& d_in = complex.boundary(q + 1, j);
    if (d_in.cols() == 0) {
      deg.image_free = true;
      deg.free_rows = std::move(free_rows);
      deg.reps = std::move(kernel);
      m.dims[j] = deg.reps.cols();
    } else {
      auto image = DenseMatrix<F>::from_integer(d_in, field);
      DenseMatrix<F> stacked(deg.slice_dim, image.cols() + kernel.cols(), field);
      for (int r = 0; r < deg.slice_dim; ++r) {
        for (int c = 0; c < image.cols(); ++c) stacked.at(r, c) = image.at(r, c);
        for (int c = 0; c < kernel.cols(); ++c) stacked.at(r, image.cols() + c) = kernel.at(r, c);
      }
      deg.solver.emplace(stacked, field);
      for (int c : deg.solver->pivot_columns())
        if (c >= image.cols()) deg.rep_positions.push_back(c);
      m.dims[j] = static_cast<long>(deg.rep_positions.size());
      deg.reps = DenseMatrix<F>(deg.slice_dim, static_cast<int>(m.dims[j]), field);
      for (int i = 0; i < static_cast<int>(m.dims[j]); ++i) {
        int kc = deg.rep_positions[i] - image.cols();
        for (int r = 0; r < deg.slice_dim; ++r) deg.reps.at(r, i) = kernel.at(r, kc);
      }
    }
  }

  m.actions.assign(m.edge_ids.size(), {});
  for (int e = 0; e < m.edge_count(); ++e) {
    m.actions[e].reserve(truncation);
    for (int j = 0; j < truncation; ++j) {
      DenseMatrix<F> act(static_cast<int>(m.dims[j + 1]), static_cast<int>(m.dims[j]), field);
      if (m.dims[j] > 0 && m.dims[j + 1] >= 0) {
        IntegerMatrix bump = complex.edge_action(q, j, e);
        for (int i = 0; i < static_cast<int>(m.dims[j]); ++i) {
          auto w = apply_sparse(bump, m.degrees[j].reps.column(i), field);
          auto coords = m.degrees[j + 1].coordinates(std::move(w));
          for (int r = 0; r < static_cast<int>(m.dims[j + 1]); ++r) act.at(r, i) = coords[r];
        }
      }
      m.actions[e].push_back(std::move(act));
    }
  }
  return m;
}

template <typename F>
GradedModule<F> truncated_module(const Graph& g, int q, int truncation, bool reduced, const F& field) {
  SwComplex complex(g, reduced);
  return truncated_module(complex, q, truncation, field);
}

// beta_{0,j}: minimal generators per weight, nonzero entries only
template <typename F>
std::map<int, long> generator_degrees(const GradedModule<F>& m) {
  std::map<int, long> out;
  for (int j = 0; j <= m.truncation; ++j) {
    if (m.dims[j] == 0) continue;
    long beta;
    if (j == 0 || m.dims[j - 1] == 0) {
      beta = m.dims[j];
    } else {
      DenseMatrix<F> stacked(static_cast<int>(m.dims[j]),
                             m.edge_count() * static_cast<int>(m.dims[j - 1]), m.field);
      for (int e = 0; e < m.edge_count(); ++e) {
        const auto& act = m.actions[e][j - 1];
        for (int r = 0; r < act.rows(); ++r)
          for (int c = 0; c < act.cols(); ++c)
            stacked.at(r, e * act.cols() + c) = act.at(r, c);
      }
      beta = m.dims[j] - field_rank(std::move(stacked), m.field);
    }
    if (beta != 0) out[j] = beta;
  }
  return out;
}

namespace detail {

std::vector<std::vector<int>> edge_subsets(int edges, int size);
int subset_index(const std::vector<std::vector<int>>& subsets, const std::vector<int>& s);

// Koszul contraction Lambda^p V (x) M_d -> Lambda^{p-1} V (x) M_{d+1}
template <typename F>
DenseMatrix<F> koszul_matrix(const GradedModule<F>& m, int p, int d) {
  const int e_count = m.edge_count();
  auto src_sets = edge_subsets(e_count, p);
  auto dst_sets = edge_subsets(e_count, p - 1);
  long h_src = (d >= 0 && d <= m.truncation) ? m.dims[d] : 0;
  long h_dst = (d + 1 >= 0 && d + 1 <= m.truncation) ? m.dims[d + 1] : 0;
  DenseMatrix<F> out(static_cast<int>(dst_sets.size() * h_dst),
                     static_cast<int>(src_sets.size() * h_src), m.field);
  if (h_src == 0 || h_dst == 0) return out;
  for (std::size_t s = 0; s < src_sets.size(); ++s) {
    for (std::size_t a = 0; a < src_sets[s].size(); ++a) {
      std::vector<int> reduced = src_sets[s];
      int edge = reduced[a];
      reduced.erase(reduced.begin() + static_cast<long>(a));
      int t = subset_index(dst_sets, reduced);
      bool negate = a % 2 == 1;
      const auto& act = m.actions[edge][d];
      for (int r = 0; r < act.rows(); ++r)
        for (int c = 0; c < act.cols(); ++c) {
          auto v = act.at(r, c);
          out.at(static_cast<int>(t * h_dst) + r, static_cast<int>(s * h_src) + c) =
              negate ? m.field.neg(v) : v;
        }
    }
  }
  return out;
}

}  // namespace detail

// beta_{p,j} = dim Tor_p(M, k)_j through the Koszul complex of the edge
// variables.
template <typename F>
long koszul_betti(const GradedModule<F>& m, int p, int j) {
  if (p < 0 || p > m.edge_count())
    fail(Errc::IndexOutOfRange, "homological index outside [0, #edges]");
  if (j > m.truncation)
    fail(Errc::TruncationTooSmall, "requested degree exceeds the module truncation");
  if (j < 0) return 0;
  int mid = j - p;
  if (mid < 0) return 0;
  long middle = binomial(m.edge_count(), p) * m.dims[mid];
  if (middle == 0) return 0;

  long rank_out = 0;
  if (p > 0) rank_out = field_rank(detail::koszul_matrix(m, p, mid), m.field);
  long rank_in = 0;
  if (mid >= 1 && p + 1 <= m.edge_count())
    rank_in = field_rank(detail::koszul_matrix(m, p + 1, mid - 1), m.field);
  return middle - rank_out - rank_in;
}

struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (p, j) -> nonzero beta
  int p_max = 0;
  int j_max = 0;
  std::string field_label;

  long at(int p, int j) const {
    auto it = entries.find({p, j});
    return it == entries.end() ? 0 : it->second;
  }
};

template <typename F>
BettiTable betti_table(const GradedModule<F>& m, int p_max, int j_max) {
  if (j_max > m.truncation)
    fail(Errc::TruncationTooSmall, "table degree range exceeds the module truncation");
  BettiTable t;
  t.p_max = p_max;
  t.j_max = j_max;
  t.field_label = m.field.label();
  for (int p = 0; p <= std::min(p_max, m.edge_count()); ++p)
    for (int j = 0; j <= j_max; ++j) {
      long b = koszul_betti(m, p, j);
      if (b != 0) t.entries[{p, j}] = b;
    }
  return t;
}

std::string betti_table_csv(const BettiTable& t);

}  // namespace gbh

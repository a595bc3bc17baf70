#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gbh/int_matrix.hpp"

namespace gbh {

namespace {

// Sparse elimination state. Rows hold values; col_rows holds the pattern
// transposed so pivot search and column ops stay cheap.
struct Elim {
  int nrows, ncols;
  bool track;
  std::vector<std::map<int, mpz_class>> rows;
  std::vector<std::set<int>> col_rows;
  std::vector<std::map<int, mpz_class>> u_rows;   // accumulates row ops
  std::vector<std::map<int, mpz_class>> vt_rows;  // V transposed, accumulates col ops

  Elim(const IntegerMatrix& m, bool track_transforms)
      : nrows(m.rows()), ncols(m.cols()), track(track_transforms) {
    rows.resize(nrows);
    col_rows.resize(ncols);
    for (const auto& t : m.entries()) {
      rows[t.row][t.col] = t.value;
      col_rows[t.col].insert(t.row);
    }
    if (track) {
      u_rows.resize(nrows);
      vt_rows.resize(ncols);
      for (int i = 0; i < nrows; ++i) u_rows[i][i] = 1;
      for (int j = 0; j < ncols; ++j) vt_rows[j][j] = 1;
    }
  }

  void set_entry(int r, int c, const mpz_class& v) {
    if (v == 0) {
      rows[r].erase(c);
      col_rows[c].erase(r);
    } else {
      rows[r][c] = v;
      col_rows[c].insert(r);
    }
  }

  // row[dst] += q * row[src]
  void add_row(int dst, int src, const mpz_class& q) {
    for (const auto& [c, v] : rows[src]) {
      auto it = rows[dst].find(c);
      mpz_class nv = (it == rows[dst].end() ? mpz_class(0) : it->second) + q * v;
      set_entry(dst, c, nv);
    }
    if (track)
      for (const auto& [c, v] : u_rows[src]) {
        mpz_class nv = u_rows[dst][c] + q * v;
        if (nv == 0)
          u_rows[dst].erase(c);
        else
          u_rows[dst][c] = nv;
      }
  }

  // col[dst] += q * col[src]
  void add_col(int dst, int src, const mpz_class& q) {
    std::vector<int> rs(col_rows[src].begin(), col_rows[src].end());
    for (int r : rs) {
      const mpz_class& v = rows[r][src];
      auto it = rows[r].find(dst);
      mpz_class nv = (it == rows[r].end() ? mpz_class(0) : it->second) + q * v;
      set_entry(r, dst, nv);
    }
    if (track)
      for (const auto& [c, v] : vt_rows[src]) {
        mpz_class nv = vt_rows[dst][c] + q * v;
        if (nv == 0)
          vt_rows[dst].erase(c);
        else
          vt_rows[dst][c] = nv;
      }
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::set<int> cols;
    for (const auto& [c, v] : rows[i]) cols.insert(c);
    for (const auto& [c, v] : rows[j]) cols.insert(c);
    rows[i].swap(rows[j]);
    for (int c : cols) {
      bool in_i = rows[i].count(c) > 0;
      bool in_j = rows[j].count(c) > 0;
      if (in_i)
        col_rows[c].insert(i);
      else
        col_rows[c].erase(i);
      if (in_j)
        col_rows[c].insert(j);
      else
        col_rows[c].erase(j);
    }
    if (track) u_rows[i].swap(u_rows[j]);
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    std::set<int> rs = col_rows[i];
    rs.insert(col_rows[j].begin(), col_rows[j].end());
    for (int r : rs) {
      auto it_i = rows[r].find(i);
      auto it_j = rows[r].find(j);
      mpz_class vi = it_i == rows[r].end() ? mpz_class(0) : it_i->second;
      mpz_class vj = it_j == rows[r].end() ? mpz_class(0) : it_j->second;
      set_entry(r, i, vj);
      set_entry(r, j, vi);
    }
    if (track) vt_rows[i].swap(vt_rows[j]);
  }

  void negate_row(int i) {
    for (auto& [c, v] : rows[i]) v = -v;
    if (track)
      for (auto& [c, v] : u_rows[i]) v = -v;
  }

  mpz_class at(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? mpz_class(0) : it->second;
  }
};

struct Pivot {
  int row = -1;
  int col = -1;
  bool found = false;
};

Pivot find_pivot(const Elim& e, int k) {
  Pivot unit, general;
  long best_cost = -1;
  mpz_class best_val;
  for (int r = k; r < e.nrows; ++r) {
    for (const auto& [c, v] : e.rows[r]) {
      if (c < k) continue;
      mpz_class av = abs(v);
      if (av == 1) {
        long cost = (static_cast<long>(e.rows[r].size()) - 1) *
                    (static_cast<long>(e.col_rows[c].size()) - 1);
        if (!unit.found || cost < best_cost ||
            (cost == best_cost && std::pair{c, r} < std::pair{unit.col, unit.row})) {
          unit = {r, c, true};
          best_cost = cost;
          if (cost == 0) return unit;
        }
      } else if (!unit.found) {
        if (!general.found || av < best_val ||
            (av == best_val && std::pair{c, r} < std::pair{general.col, general.row})) {
          general = {r, c, true};
          best_val = av;
        }
      }
    }
  }
  return unit.found ? unit : general;
}

// Reduce the isolated diagonal pair (d_i, d_j), i < j, to (gcd, lcm).
// Rows i and j hold only their diagonal entries at this point.
void fix_divisibility(Elim& e, int i, int j) {
  mpz_class a = e.at(i, i), b = e.at(j, j);
  mpz_class g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  e.add_row(i, j, y);        // M[i][j] = y*b
  e.add_col(j, i, x);        // M[i][j] = y*b + x*a = g
  e.swap_cols(i, j);         // diag g, off-diagonal a and b
  mpz_class qa = a / g, qb = b / g;
  e.add_col(j, i, -qa);      // clear M[i][j]; M[j][j] = -a*b/g
  e.add_row(j, i, -qb);      // clear M[j][i]
  if (e.at(j, j) < 0) e.negate_row(j);
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  Elim e(m, with_transforms);
  int k = 0;
  int bound = std::min(e.nrows, e.ncols);
  while (k < bound) {
    Pivot p = find_pivot(e, k);
    if (!p.found) break;
    e.swap_rows(k, p.row);
    e.swap_cols(k, p.col);
    if (e.at(k, k) < 0) e.negate_row(k);

    for (;;) {
      mpz_class piv = e.at(k, k);
      bool restart = false;
      std::vector<int> col_entries(e.col_rows[k].begin(), e.col_rows[k].end());
      for (int r : col_entries) {
        if (r == k) continue;
        mpz_class a = e.at(r, k);
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), piv.get_mpz_t());
        if (q != 0) e.add_row(r, k, -q);
        if (e.at(r, k) != 0) {  // remainder strictly smaller than pivot
          e.swap_rows(k, r);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      std::vector<int> row_entries;
      for (const auto& [c, v] : e.rows[k])
        if (c != k) row_entries.push_back(c);
      for (int c : row_entries) {
        mpz_class a = e.at(k, c);
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), piv.get_mpz_t());
        if (q != 0) e.add_col(c, k, -q);
        if (e.at(k, c) != 0) {
          e.swap_cols(k, c);
          restart = true;
          break;
        }
      }
      if (!restart) break;
    }
    ++k;
  }

  // enforce the divisibility chain on the isolated diagonal
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      mpz_class di = e.at(i, i), dj = e.at(j, j);
      if (dj % di != 0) fix_divisibility(e, i, j);
    }

  SmithResult res;
  res.diagonal.reserve(k);
  std::vector<Triplet> s_entries;
  for (int i = 0; i < k; ++i) {
    res.diagonal.push_back(e.at(i, i));
    s_entries.push_back({i, i, res.diagonal.back()});
  }
  res.s = IntegerMatrix::from_triplets(e.nrows, e.ncols, std::move(s_entries));
  if (with_transforms) {
    std::vector<Triplet> ut, vt;
    for (int r = 0; r < e.nrows; ++r)
      for (const auto& [c, v] : e.u_rows[r]) ut.push_back({r, c, v});
    for (int r = 0; r < e.ncols; ++r)
      for (const auto& [c, v] : e.vt_rows[r]) vt.push_back({c, r, v});  // transpose back
    res.u = IntegerMatrix::from_triplets(e.nrows, e.nrows, std::move(ut));
    res.v = IntegerMatrix::from_triplets(e.ncols, e.ncols, std::move(vt));
    res.has_transforms = true;
  }
  return res;
}

int integer_rank(const IntegerMatrix& m) {
  return smith_normal_form(m, /*with_transforms=*/false).rank();
}

std::vector<mpz_class> invariant_factors(const IntegerMatrix& m) {
  return smith_normal_form(m, /*with_transforms=*/false).diagonal;
}

}  // namespace gbh

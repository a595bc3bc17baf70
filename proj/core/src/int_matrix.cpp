#include "gbh/int_matrix.hpp"

#include <algorithm>
#include <map>

namespace gbh {

IntegerMatrix IntegerMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
  IntegerMatrix m(rows, cols);
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      fail(Errc::DimensionMismatch, "triplet index out of range");
    if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
      m.entries_.back().value += t.value;
      if (m.entries_.back().value == 0) m.entries_.pop_back();
    } else if (t.value != 0) {
      m.entries_.push_back(std::move(t));
    }
  }
  return m;
}

mpz_class IntegerMatrix::entry(int r, int c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                             [](const Triplet& t, const std::pair<int, int>& p) {
                               return t.row != p.first ? t.row < p.first : t.col < p.second;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return 0;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  std::vector<std::vector<std::pair<int, const mpz_class*>>> rhs_rows(rhs.rows_);
  for (const auto& t : rhs.entries_) rhs_rows[t.row].push_back({t.col, &t.value});
  std::map<std::pair<int, int>, mpz_class> acc;
  for (const auto& t : entries_)
    for (const auto& [c2, w] : rhs_rows[t.col]) acc[{t.row, c2}] += t.value * (*w);
  std::vector<Triplet> out;
  out.reserve(acc.size());
  for (auto& [rc, v] : acc)
    if (v != 0) out.push_back({rc.first, rc.second, std::move(v)});
  return from_triplets(rows_, rhs.cols_, std::move(out));
}

mpz_class bareiss_determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
  for (const auto& t : m.entries()) a[t.row][t.col] = t.value;

  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace gbh

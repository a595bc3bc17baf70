#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gbh/error.hpp"
#include "gbh/int_matrix.hpp"

namespace gbh {

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem from_mpz(const mpz_class& z) const { return Elem(z); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string label() const { return "Q"; }
};

// F_p for prime p < 2^31. Multiplication reduces a 64-bit product with a
// precomputed Barrett constant; values live in [0, p).
struct PrimeField {
  using Elem = std::uint32_t;

  explicit PrimeField(unsigned long prime) : p(static_cast<std::uint32_t>(prime)) {
    if (prime < 2 || prime >= (1ul << 31) || !is_prime(prime))
      fail(Errc::BadField, "field order must be a prime below 2^31");
    magic = static_cast<unsigned __int128>(~0ull) / p + 1;
  }

  std::uint32_t p;
  unsigned __int128 magic;

  Elem reduce64(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((magic * x) >> 64);
    std::int64_t r = static_cast<std::int64_t>(x - q * p);
    if (r < 0) r += p;
    if (r >= p) r -= p;
    return static_cast<Elem>(r);
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return reduce64(static_cast<std::uint64_t>(a) * b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) fail(Errc::BadField, "division by zero in prime field");
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return static_cast<Elem>(t < 0 ? t + p : t);
  }
  Elem from_mpz(const mpz_class& z) const {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r.get_ui());
  }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string label() const { return "F" + std::to_string(p); }
};

template <typename F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, const F& field)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

  static DenseMatrix from_integer(const IntegerMatrix& m, const F& field) {
    DenseMatrix out(m.rows(), m.cols(), field);
    for (const auto& t : m.entries()) out.at(t.row, t.col) = field.from_mpz(t.value);
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  // row[dst] += f * row[src]
  void row_axpy(int dst, int src, const Elem& f, const F& field) {
    Elem* d = &data_[static_cast<std::size_t>(dst) * cols_];
    const Elem* s = &data_[static_cast<std::size_t>(src) * cols_];
    if constexpr (std::is_same_v<F, PrimeField>) {
      for (int i = 0; i < cols_; ++i)
        d[i] = field.reduce64(static_cast<std::uint64_t>(d[i]) +
                              static_cast<std::uint64_t>(f) * s[i]);
    } else {
      for (int i = 0; i < cols_; ++i) {
        if (field.is_zero(s[i])) continue;
        d[i] = field.add(d[i], field.mul(f, s[i]));
      }
    }
  }

  void scale_row(int r, const Elem& f, const F& field) {
    Elem* d = &data_[static_cast<std::size_t>(r) * cols_];
    for (int i = 0; i < cols_; ++i) d[i] = field.mul(f, d[i]);
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    Elem* a = &data_[static_cast<std::size_t>(i) * cols_];
    Elem* b = &data_[static_cast<std::size_t>(j) * cols_];
    for (int k = 0; k < cols_; ++k) std::swap(a[k], b[k]);
  }

  std::vector<Elem> column(int c) const {
    std::vector<Elem> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

// In-place reduced row echelon form with leftmost-pivot order; returns the
// pivot columns.
template <typename F>
std::vector<int> rref_in_place(DenseMatrix<F>& m, const F& field) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!field.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    typename F::Elem invp = field.inv(m.at(r, c));
    m.scale_row(r, invp, field);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m.at(i, c))) continue;
      m.row_axpy(i, r, field.neg(m.at(i, c)), field);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename F>
int field_rank(DenseMatrix<F> m, const F& field) {
  return static_cast<int>(rref_in_place(m, field).size());
}

// Kernel basis from the RREF: one column per free column, with identity
// pattern on the free coordinates.
template <typename F>
DenseMatrix<F> kernel_basis(DenseMatrix<F> m, const F& field, std::vector<int>* free_cols_out = nullptr) {
  std::vector<int> pivots = rref_in_place(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  DenseMatrix<F> k(m.cols(), static_cast<int>(free_cols.size()), field);
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    int fc = free_cols[j];
    k.at(fc, j) = field.one();
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      k.at(pivots[i], j) = field.neg(m.at(i, fc));
  }
  if (free_cols_out) *free_cols_out = std::move(free_cols);
  return k;
}

// Exact least-structure solver for A x = w against a fixed matrix A,
// built once and queried many times. Internally works on the transpose so
// elimination is row-contiguous. Solutions are supported on the pivot
// columns of A, which makes quotient coordinates well defined.
template <typename F>
class ColumnSolver {
 public:
  using Elem = typename F::Elem;

  ColumnSolver(const DenseMatrix<F>& a, const F& field)
      : field_(field), m_(a.rows()), c_(a.cols()), et_(a.cols(), a.rows(), field),
        ct_(a.cols(), a.cols(), field) {
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < c_; ++c) et_.at(c, r) = a.at(r, c);
    for (int j = 0; j < c_; ++j) ct_.at(j, j) = field_.one();

    std::vector<bool> used_row(m_, false);
    for (int j = 0; j < c_; ++j) {
      for (const auto& [jp, rp] : pivots_) {
        const Elem f = et_.at(j, rp);
        if (field_.is_zero(f)) continue;
        et_.row_axpy(j, jp, field_.neg(f), field_);
        ct_.row_axpy(j, jp, field_.neg(f), field_);
      }
      int pr = -1;
      for (int r = 0; r < m_; ++r)
        if (!used_row[r] && !field_.is_zero(et_.at(j, r))) {
          pr = r;
          break;
        }
      if (pr < 0) continue;  // dependent column
      Elem invp = field_.inv(et_.at(j, pr));
      et_.scale_row(j, invp, field_);
      ct_.scale_row(j, invp, field_);
      used_row[pr] = true;
      pivots_.push_back({j, pr});
      pivot_col_.push_back(j);
    }
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<int>& pivot_columns() const { return pivot_col_; }

  // coefficients over the original columns of A; nullopt when w is
  // outside the column space
  std::optional<std::vector<Elem>> solve(std::vector<Elem> w) const {
    std::vector<Elem> alpha(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto& [j, r] = pivots_[i];
      Elem a = w[r];
      alpha[i] = a;
      if (!field_.is_zero(a))
        for (int t = 0; t < m_; ++t) w[t] = field_.sub(w[t], field_.mul(a, et_.at(j, t)));
    }
    for (const Elem& v : w)
      if (!field_.is_zero(v)) return std::nullopt;
    std::vector<Elem> x(c_, field_.zero());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Elem& a = alpha[i];
      if (field_.is_zero(a)) continue;
      int j = pivots_[i].first;
      for (int t = 0; t < c_; ++t)
        x[t] = field_.add(x[t], field_.mul(a, ct_.at(j, t)));
    }
    return x;
  }

 private:
  F field_;
  int m_, c_;
  DenseMatrix<F> et_;  // transposed echelon form of A
  DenseMatrix<F> ct_;  // transposed combination record, A^T = (old A^T ops)
  std::vector<std::pair<int, int>> pivots_;  // (column of A, pivot row)
  std::vector<int> pivot_col_;
};

}  // namespace gbh

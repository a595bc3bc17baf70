#pragma once

#include <gmpxx.h>

#include <vector>

#include "gbh/error.hpp"

namespace gbh {

struct Triplet {
  int row = 0;
  int col = 0;
  mpz_class value;
};

// Sparse integer matrix in coordinate-list form. Entries are kept sorted
// by (row, col), duplicate-free and nonzero.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(Errc::DimensionMismatch, "negative matrix dimension");
  }

  static IntegerMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Triplet>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  mpz_class entry(int r, int c) const;

  IntegerMatrix multiply(const IntegerMatrix& rhs) const;

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Triplet> entries_;
};

inline bool operator==(const Triplet& a, const Triplet& b) {
  return a.row == b.row && a.col == b.col && a.value == b.value;
}

struct SmithResult {
  IntegerMatrix s;                    // diagonal, nonnegative, divisibility chain
  IntegerMatrix u;                    // unimodular, u * m * v = s (when with_transforms)
  IntegerMatrix v;
  std::vector<mpz_class> diagonal;    // the nonzero invariant factors, ascending chain
  bool has_transforms = false;

  int rank() const { return static_cast<int>(diagonal.size()); }
};

// Smith normal form over Z with arbitrary-precision entries. Unit pivots
// are taken first with a Markowitz-style fill heuristic; the residual is
// handled by the classical algorithm with divisibility fix-ups.
SmithResult smith_normal_form(const IntegerMatrix& m, bool with_transforms = true);

// rank over Z (= rank over Q)
int integer_rank(const IntegerMatrix& m);

// invariant factors >= 1, ascending divisibility chain (no zeros)
std::vector<mpz_class> invariant_factors(const IntegerMatrix& m);

// fraction-free determinant; square inputs at test scale only
mpz_class bareiss_determinant(const IntegerMatrix& m);

}  // namespace gbh

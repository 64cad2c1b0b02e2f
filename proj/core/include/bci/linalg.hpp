#pragma once

// Exact linear algebra over Q: fraction-free sparse echelon forms for ranks,
// Bareiss elimination for determinants.

#include "bci/arith.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace bci {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Incremental row echelon form with integer, content-reduced rows.
class RowEchelon {
 public:
  /// Inserts a row; returns true iff it raised the rank.
  bool add(const SparseRow& row);
  /// True iff the row lies in the span of the rows added so far.
  bool in_span(const SparseRow& row) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  using IntRow = std::vector<std::pair<std::size_t, Integer>>;
  static IntRow to_integer_row(const SparseRow& row);
  IntRow reduce(IntRow row) const;

  std::map<std::size_t, IntRow> pivots_;
};

std::size_t rank(const std::vector<SparseRow>& rows);
std::size_t rank(const RationalMatrix& m);

/// Determinant by Bareiss fraction-free elimination after clearing row denominators.
Rational determinant(const RationalMatrix& m);

}  // namespace bci

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tolspace {

using BigInt = boost::multiprecision::cpp_int;
using DenseMatrix = std::vector<std::vector<std::int64_t>>;

/// Column-compressed integer matrix. Entries within a column are kept sorted
/// by row and zero entries are never stored.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<int, std::int64_t>>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return static_cast<int>(columns_.size()); }
  const Column& column(int c) const { return columns_.at(static_cast<std::size_t>(c)); }

  /// Appends to column c; rows must be pushed in increasing order.
  void push(int c, int row, std::int64_t value);
  std::int64_t at(int r, int c) const;
  std::size_t nonzeros() const noexcept;

  DenseMatrix to_dense() const;
  static SparseMatrix from_dense(const DenseMatrix& m);

 private:
  int rows_ = 0;
  std::vector<Column> columns_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct SmithResult {
  std::size_t rank = 0;
  /// Nonzero invariant factors d1 | d2 | ... (all positive), rank entries.
  std::vector<BigInt> factors;
  /// True when checked 64-bit arithmetic overflowed and the computation was
  /// redone over unbounded integers.
  bool used_bigint = false;
};

/// Exact Smith normal form. Unit pivots are eliminated sparsely (Markowitz
/// order); whatever remains is reduced densely with minimal-magnitude
/// pivoting. Runs on overflow-checked int64 first and falls back to BigInt.
SmithResult smith_normal_form(const SparseMatrix& m);
SmithResult smith_normal_form(const DenseMatrix& m);

/// Same computation forced onto one arithmetic. The checked variant throws
/// ArithmeticOverflow instead of falling back.
SmithResult smith_normal_form_checked(const SparseMatrix& m);
SmithResult smith_normal_form_bigint(const SparseMatrix& m);

}  // namespace tolspace

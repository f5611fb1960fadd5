#pragma once

#include "llv/linalg.hpp"

#include <map>
#include <vector>

namespace llv {

struct SparseEntry {
  std::size_t row;
  Rational value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector keyed by coordinate index; never stores zeros.
using SparseVector = std::map<std::size_t, Rational>;

/// Column-compressed exact matrix. Each column is sorted by row and holds no zeros.
///
/// Operators on symmetric powers are extremely sparse (a derivation column has
/// at most n*d entries), so products and commutators stay cheap at Sym^5.
class SparseMatrix {
 public:
  using Column = std::vector<SparseEntry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix from_dense(const QMatrix& m);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  const Column& column(std::size_t j) const { return columns_[j]; }
  /// Replaces column j; entries are sorted and zeros dropped.
  void set_column(std::size_t j, Column entries);
  /// Accumulates a sparse vector into column j (replacing it).
  void set_column(std::size_t j, const SparseVector& entries);

  Rational at(std::size_t i, std::size_t j) const;
  QMatrix to_dense() const;
  /// Dense copy restricted to the given rows and columns (in the given order).
  QMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  SparseVector apply(const SparseVector& x) const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix& operator*=(const Rational& s);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const Rational& s, SparseMatrix m);
/// Product through the parallel kernel.
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace llv

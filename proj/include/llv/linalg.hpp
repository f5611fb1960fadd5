#pragma once

#include "llv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace llv {

/// Dense vector of exact rationals.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : entries_(dim) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static QVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rational& s);

  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::vector<Rational> entries_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator-(QVector a);
QVector operator*(const Rational& s, QVector v);

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static QMatrix diagonal(const std::vector<Rational>& diag);
  /// Matrix whose j-th column is columns[j]; all columns must share one dimension.
  static QMatrix from_columns(const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  QVector column(std::size_t j) const;

  QMatrix transpose() const;
  QVector apply(const QVector& x) const;
  bool is_zero() const;
  bool is_symmetric() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& s);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a);
QMatrix operator*(const Rational& s, QMatrix m);
/// Product through the parallel kernel; bit-identical to the serial one.
QMatrix operator*(const QMatrix& a, const QMatrix& b);

/// AB - BA.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Symmetric bilinear form given by its Gram matrix.
class BilinearForm {
 public:
  /// Throws DimensionError for a non-square Gram and PreconditionError for a non-symmetric one.
  explicit BilinearForm(QMatrix gram);

  std::size_t size() const { return gram_.rows(); }
  const QMatrix& gram() const { return gram_; }

  Rational operator()(const QVector& x, const QVector& y) const;
  Rational norm(const QVector& x) const { return (*this)(x, x); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  QMatrix gram_;
};

/// x^T G y. Throws DimensionError when either vector has the wrong length.
Rational form_eval(const BilinearForm& form, const QVector& x, const QVector& y);

/// Reduced row echelon form with first-nonzero pivoting.
struct Rref {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

Rref rref(QMatrix m);
std::size_t rank(const QMatrix& m);
/// Basis of the right null space; empty iff full column rank.
std::vector<QVector> kernel_basis(const QMatrix& m);
Rational determinant(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Some x with Ax = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Sylvester criterion: every leading principal minor is positive.
bool is_positive_definite(const BilinearForm& form);
/// Same, validating symmetry of a raw matrix first (PreconditionError otherwise).
bool is_positive_definite(const QMatrix& gram);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia by exact symmetric congruence diagonalisation.
Signature signature(const BilinearForm& form);

struct ExtGcd {
  Integer g;
  Integer m1;
  Integer m2;
};

/// g = gcd(a, b) >= 1 with m1*a - m2*b = g. When b != 0, m1 is normalised
/// into (0, |b|/g]. Throws PreconditionError for a = b = 0.
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// "[a,b,...]" and "[[..],[..]]" with entries in to_string form.
std::string to_string(const QVector& v);
std::string to_string(const QMatrix& m);

}  // namespace llv

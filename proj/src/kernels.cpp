#include "llv/kernels.hpp"

#include "llv/errors.hpp"

#include <cstdint>
#include <utility>

namespace llv::kernels {

namespace {

void check_product_shape(std::size_t a_cols, std::size_t b_rows) {
  if (a_cols != b_rows) throw DimensionError("matrix product: inner dimensions differ");
}

void dense_row_product(const QMatrix& a, const QMatrix& b, QMatrix& c, std::size_t i) {
  Rational t;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (sgn(aik) == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Rational& bkj = b(k, j);
      if (sgn(bkj) == 0) continue;
      t = aik * bkj;
      c(i, j) += t;
    }
  }
}

SparseVector sparse_column_product(const SparseMatrix& a, const SparseMatrix& b, std::size_t j) {
  SparseVector acc;
  for (const auto& [k, bkj] : b.column(j)) {
    for (const auto& [i, aik] : a.column(k)) acc[i] += aik * bkj;
  }
  return acc;
}

// Selects the pivot row for column c at or below r; rows() if the column is clear.
std::size_t find_pivot(const QMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t p = r; p < m.rows(); ++p) {
    if (sgn(m(p, c)) != 0) return p;
  }
  return m.rows();
}

// Swaps the pivot into row r, normalises it and returns its nonzero columns.
std::vector<std::size_t> prepare_pivot_row(QMatrix& m, std::size_t p, std::size_t r, std::size_t c) {
  if (p != r) {
    auto rp = m.row(p);
    auto rr = m.row(r);
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(rp[j], rr[j]);
  }
  const Rational inv = 1 / m(r, c);
  std::vector<std::size_t> support;
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (sgn(m(r, j)) == 0) continue;
    m(r, j) *= inv;
    support.push_back(j);
  }
  return support;
}

void eliminate_row(QMatrix& m, std::size_t i, std::size_t r, std::size_t c,
                   const std::vector<std::size_t>& support) {
  if (i == r || sgn(m(i, c)) == 0) return;
  const Rational factor = m(i, c);
  Rational t;
  for (std::size_t j : support) {
    t = factor * m(r, j);
    m(i, j) -= t;
  }
}

}  // namespace

namespace serial {

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  check_product_shape(a.cols(), b.rows());
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) dense_row_product(a, b, c, i);
  return c;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_product_shape(a.cols(), b.rows());
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) c.set_column(j, sparse_column_product(a, b, j));
  return c;
}

void rref_inplace(QMatrix& m, std::vector<std::size_t>& pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    const auto support = prepare_pivot_row(m, p, r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) eliminate_row(m, i, r, c, support);
    pivots.push_back(c);
    ++r;
  }
}

SparseMatrix build_columns(std::size_t rows, std::size_t cols, const ColumnBuilder& column) {
  SparseMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) out.set_column(j, column(j));
  return out;
}

}  // namespace serial

namespace parallel {

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  check_product_shape(a.cols(), b.rows());
  QMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < rows; ++i) dense_row_product(a, b, c, static_cast<std::size_t>(i));
  return c;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_product_shape(a.cols(), b.rows());
  SparseMatrix c(a.rows(), b.cols());
  const auto cols = static_cast<std::int64_t>(b.cols());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < cols; ++j) {
    const auto col = static_cast<std::size_t>(j);
    c.set_column(col, sparse_column_product(a, b, col));
  }
  return c;
}

void rref_inplace(QMatrix& m, std::vector<std::size_t>& pivots) {
  std::size_t r = 0;
  const auto rows = static_cast<std::int64_t>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    const auto support = prepare_pivot_row(m, p, r, c);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < rows; ++i) eliminate_row(m, static_cast<std::size_t>(i), r, c, support);
    pivots.push_back(c);
    ++r;
  }
}

SparseMatrix build_columns(std::size_t rows, std::size_t cols, const ColumnBuilder& column) {
  SparseMatrix out(rows, cols);
  const auto n = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < n; ++j) {
    const auto col = static_cast<std::size_t>(j);
    out.set_column(col, column(col));
  }
  return out;
}

}  // namespace parallel

}  // namespace llv::kernels

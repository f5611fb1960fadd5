#include "llv/sparse.hpp"

#include "llv/errors.hpp"
#include "llv/kernels.hpp"

#include <algorithm>

namespace llv {

SparseMatrix SparseMatrix::from_dense(const QMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Column col;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sgn(m(i, j)) != 0) col.push_back({i, m(i, j)});
    }
    s.columns_[j] = std::move(col);
  }
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix s(n, n);
  for (std::size_t j = 0; j < n; ++j) s.columns_[j] = {{j, Rational(1)}};
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t j, Column entries) {
  if (j >= cols()) throw DimensionError("set_column: column out of range");
  std::erase_if(entries, [](const SparseEntry& e) { return sgn(e.value) == 0; });
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].row == entries[k - 1].row) throw PreconditionError("set_column: duplicate row");
  }
  if (!entries.empty() && entries.back().row >= rows_) throw DimensionError("set_column: row out of range");
  columns_[j] = std::move(entries);
}

void SparseMatrix::set_column(std::size_t j, const SparseVector& entries) {
  Column col;
  col.reserve(entries.size());
  for (const auto& [i, v] : entries) {
    if (sgn(v) != 0) col.push_back({i, v});
  }
  set_column(j, std::move(col));
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& col = columns_.at(j);
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const SparseEntry& e, std::size_t r) { return e.row < r; });
  if (it != col.end() && it->row == i) return it->value;
  return 0;
}

QMatrix SparseMatrix::to_dense() const {
  QMatrix m(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, v] : columns_[j]) m(i, j) = v;
  return m;
}

QMatrix SparseMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<std::size_t> row_slot(rows_, rows_);
  for (std::size_t k = 0; k < rows.size(); ++k) row_slot.at(rows[k]) = k;
  QMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [i, v] : columns_.at(cols[c])) {
      if (row_slot[i] != rows_) m(row_slot[i], c) = v;
    }
  }
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [j, xj] : x) {
    if (j >= cols()) throw DimensionError("sparse apply: index out of range");
    for (const auto& [i, v] : columns_[j]) y[i] += v * xj;
  }
  std::erase_if(y, [](const auto& kv) { return sgn(kv.second) == 0; });
  return y;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& c : columns_) c.clear();
    return *this;
  }
  for (auto& c : columns_)
    for (auto& e : c) e.value *= s;
  return *this;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sparse sum: shapes differ");
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseVector acc;
    for (const auto& [i, v] : a.column(j)) acc[i] += v;
    for (const auto& [i, v] : b.column(j)) {
      if (sign > 0) acc[i] += v;
      else acc[i] -= v;
    }
    out.set_column(j, acc);
  }
  return out;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, +1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, -1); }
SparseMatrix operator*(const Rational& s, SparseMatrix m) { return m *= s; }
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) { return kernels::parallel::multiply(a, b); }
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

}  // namespace llv

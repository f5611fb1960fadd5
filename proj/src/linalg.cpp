#include "llv/linalg.hpp"

#include "llv/errors.hpp"
#include "llv/kernels.hpp"

#include <string>
#include <utility>

namespace llv {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_square(const QMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace

// ---------------------------------------------------------------- QVector

QVector QVector::unit(std::size_t dim, std::size_t i) {
  QVector v(dim);
  v[i] = 1;
  return v;
}

bool QVector::is_zero() const {
  for (const auto& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

QVector& QVector::operator+=(const QVector& other) {
  require_same_dim(dim(), other.dim(), "vector sum");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  require_same_dim(dim(), other.dim(), "vector difference");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator-(QVector a) { return a *= Rational(-1); }
QVector operator*(const Rational& s, QVector v) { return v *= s; }

// ---------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dim(rows[i].size(), m.cols(), "matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rational>& diag) {
  QMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
  if (columns.empty()) return {};
  QMatrix m(columns.front().dim(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same_dim(columns[j].dim(), m.rows(), "matrix columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QVector QMatrix::apply(const QVector& x) const {
  require_same_dim(cols_, x.dim(), "matrix-vector product");
  QVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(QMatrix a) { return a *= Rational(-1); }
QMatrix operator*(const Rational& s, QMatrix m) { return m *= s; }
QMatrix operator*(const QMatrix& a, const QMatrix& b) { return kernels::parallel::multiply(a, b); }

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- BilinearForm

BilinearForm::BilinearForm(QMatrix gram) : gram_(std::move(gram)) {
  require_square(gram_, "Gram matrix");
  if (!gram_.is_symmetric()) throw PreconditionError("Gram matrix is not symmetric");
}

Rational BilinearForm::operator()(const QVector& x, const QVector& y) const { return form_eval(*this, x, y); }

Rational form_eval(const BilinearForm& form, const QVector& x, const QVector& y) {
  require_same_dim(x.dim(), form.size(), "form_eval x");
  require_same_dim(y.dim(), form.size(), "form_eval y");
  Rational acc;
  const QMatrix& g = form.gram();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (sgn(y[j]) == 0 || sgn(g(i, j)) == 0) continue;
      acc += x[i] * g(i, j) * y[j];
    }
  }
  return acc;
}

// ---------------------------------------------------------------- elimination

Rref rref(QMatrix m) {
  Rref out;
  kernels::parallel::rref_inplace(m, out.pivot_columns);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) v[r.pivot_columns[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const QMatrix& m) {
  require_square(m, "determinant");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Rref r = rref(std::move(aug));
  if (r.pivot_columns.size() < n || r.pivot_columns[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  require_same_dim(a.rows(), b.dim(), "solve");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Rref r = rref(std::move(aug));
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) x[r.pivot_columns[k]] = r.reduced(k, a.cols());
  return x;
}

// ---------------------------------------------------------------- definiteness

bool is_positive_definite(const BilinearForm& form) {
  const QMatrix& g = form.gram();
  const std::size_t n = g.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    if (sgn(determinant(lead)) <= 0) return false;
  }
  return true;
}

bool is_positive_definite(const QMatrix& gram) { return is_positive_definite(BilinearForm(gram)); }

Signature signature(const BilinearForm& form) {
  QMatrix g = form.gram();
  const std::size_t n = g.rows();
  Signature sig;
  auto add_row_col = [&](std::size_t dst, std::size_t src) {
    // basis change x_dst <- x_dst + x_src, applied as a congruence
    for (std::size_t j = 0; j < n; ++j) g(dst, j) += g(src, j);
    for (std::size_t i = 0; i < n; ++i) g(i, dst) += g(i, src);
  };
  auto swap_row_col = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(g(p, p)) == 0) ++p;
    if (p == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (sgn(g(i, j)) != 0) {
            add_row_col(i, j);
            p = i;
            found = true;
          }
        }
      }
      if (!found) {
        sig.zero += n - k;
        return sig;
      }
    }
    if (p != k) swap_row_col(p, k);
    const Rational pivot = g(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(g(i, k)) == 0) continue;
      const Rational f = g(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) g(i, j) -= f * g(k, j);
      for (std::size_t j = k; j < n; ++j) g(j, i) = g(i, j);
    }
    (sgn(pivot) > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

// ---------------------------------------------------------------- gcd

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw PreconditionError("ext_gcd(0, 0) is undefined");
  ExtGcd out;
  Integer s, t;
  mpz_gcdext(out.g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // s*a + t*b = g  ==>  m1 = s, m2 = -t
  out.m1 = s;
  out.m2 = -t;
  if (b != 0) {
    const Integer period = abs(b) / out.g;
    Integer m1 = out.m1 % period;  // truncated remainder, may be negative
    if (m1 <= 0) m1 += period;
    out.m1 = m1;
    out.m2 = (out.m1 * a - out.g) / b;
  }
  return out;
}

std::string to_string(const QVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string to_string(const QMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += to_string(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace llv

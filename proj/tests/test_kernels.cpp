// The OpenMP kernels must agree bit for bit with their serial references.

#include "oracles.hpp"

#include "llv/kernels.hpp"
#include "llv/sparse.hpp"

#include <doctest.h>
#include <omp.h>

using namespace llv;

namespace {

SparseMatrix random_sparse(oracle::Gen& gen, std::size_t rows, std::size_t cols, int density_percent) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (gen.integer(0, 99) < density_percent) m(i, j) = gen.rational(9);
  return SparseMatrix::from_dense(m);
}

}  // namespace

TEST_CASE("dense multiply: serial and parallel agree") {
  oracle::Gen gen(1);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 10; ++trial) {
      const QMatrix a = gen.matrix(7, 5, 12);
      const QMatrix b = gen.matrix(5, 6, 12);
      const QMatrix s = kernels::serial::multiply(a, b);
      CHECK(kernels::parallel::multiply(a, b) == s);
      CHECK(s == oracle::naive_product(a, b));
    }
  }
}

TEST_CASE("sparse multiply: serial and parallel agree") {
  oracle::Gen gen(2);
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 10; ++trial) {
      const SparseMatrix a = random_sparse(gen, 9, 8, 25);
      const SparseMatrix b = random_sparse(gen, 8, 11, 25);
      const SparseMatrix s = kernels::serial::multiply(a, b);
      CHECK(kernels::parallel::multiply(a, b) == s);
      CHECK(s.to_dense() == oracle::naive_product(a.to_dense(), b.to_dense()));
    }
  }
}

TEST_CASE("rref: serial and parallel agree") {
  oracle::Gen gen(3);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t inner = static_cast<std::size_t>(gen.integer(1, 6));
      const QMatrix m = oracle::naive_product(gen.matrix(6, inner, 5), gen.matrix(inner, 8, 5));
      QMatrix s = m;
      QMatrix p = m;
      std::vector<std::size_t> ps;
      std::vector<std::size_t> pp;
      kernels::serial::rref_inplace(s, ps);
      kernels::parallel::rref_inplace(p, pp);
      CHECK(s == p);
      CHECK(ps == pp);
      CHECK(ps.size() <= inner);
    }
  }
}

TEST_CASE("build_columns: serial and parallel agree") {
  auto builder = [](std::size_t j) {
    SparseVector v;
    v[j % 5] = Rational(static_cast<long>(j) + 1, 3);
    if (j % 3 == 0) v[(j + 2) % 5] = -1;
    return v;
  };
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    const SparseMatrix s = kernels::serial::build_columns(5, 40, builder);
    CHECK(kernels::parallel::build_columns(5, 40, builder) == s);
    CHECK(s.at(1, 1) == Rational(2, 3));
    CHECK(s.at(2, 0) == -1);
  }
}

TEST_CASE("sparse matrix basics") {
  const QMatrix d = QMatrix::from_rows({{1, 0, 2}, {0, 0, 3}});
  const SparseMatrix s = SparseMatrix::from_dense(d);
  CHECK(s.nonzeros() == 3);
  CHECK(s.to_dense() == d);
  CHECK(s.submatrix({1}, {2, 0}) == QMatrix::from_rows({{3, 0}}));
  CHECK((s - s).is_zero());
  CHECK((s + s).to_dense() == Rational(2) * d);
  const SparseVector x{{0, 1}, {2, 1}};
  const SparseVector y = s.apply(x);
  CHECK(y.at(0) == 3);
  CHECK(y.at(1) == 3);
  CHECK(commutator(SparseMatrix::identity(3), SparseMatrix::from_dense(QMatrix::identity(3))).is_zero());
}

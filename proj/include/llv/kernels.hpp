#pragma once

// Data-parallel kernels. Each kernel has a serial reference in `serial` and an
// OpenMP version in `parallel`. The two perform the same exact arithmetic per
// output element, so their results are identical regardless of thread count;
// the unit tests compare them and bench_kernels times them.

#include "llv/linalg.hpp"
#include "llv/sparse.hpp"

#include <functional>

namespace llv::kernels {

/// Builds column j of a sparse operator. Must be safe to call concurrently.
using ColumnBuilder = std::function<SparseVector(std::size_t)>;

namespace serial {

QMatrix multiply(const QMatrix& a, const QMatrix& b);
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
/// In-place Gauss-Jordan; appends pivot columns.
void rref_inplace(QMatrix& m, std::vector<std::size_t>& pivots);
SparseMatrix build_columns(std::size_t rows, std::size_t cols, const ColumnBuilder& column);

}  // namespace serial

namespace parallel {

QMatrix multiply(const QMatrix& a, const QMatrix& b);
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
void rref_inplace(QMatrix& m, std::vector<std::size_t>& pivots);
SparseMatrix build_columns(std::size_t rows, std::size_t cols, const ColumnBuilder& column);

}  // namespace parallel

}  // namespace llv::kernels

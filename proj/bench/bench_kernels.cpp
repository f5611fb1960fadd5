// Serial reference vs OpenMP kernels on the workloads the suites generate:
// dense rational products, Gauss-Jordan elimination, and operator assembly on Sym^n.

#include "llv/kernels.hpp"
#include "llv/random.hpp"
#include "llv/sym.hpp"

#include <benchmark/benchmark.h>

using namespace llv;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(20);
  return m;
}

template <bool Parallel>
void BM_DenseMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_matrix(n, 1);
  const QMatrix b = random_matrix(n, 2);
  for (auto _ : state) {
    QMatrix c = Parallel ? kernels::parallel::multiply(a, b) : kernels::serial::multiply(a, b);
    benchmark::DoNotOptimize(c);
  }
}

template <bool Parallel>
void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_matrix(n, 3);
  for (auto _ : state) {
    QMatrix m = a;
    std::vector<std::size_t> pivots;
    if (Parallel)
      kernels::parallel::rref_inplace(m, pivots);
    else
      kernels::serial::rref_inplace(m, pivots);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void BM_LaplacianAssembly(benchmark::State& state) {
  const SymBasis basis(mukai_extend(kummer_lattice(2)), static_cast<unsigned>(state.range(0)));
  const std::size_t rows = sym_dim(static_cast<unsigned>(basis.vars()), basis.degree() - 2).get_ui();
  const kernels::ColumnBuilder column = [&](std::size_t j) { return laplacian_column(basis, j); };
  for (auto _ : state) {
    SparseMatrix m = Parallel ? kernels::parallel::build_columns(rows, basis.size(), column)
                              : kernels::serial::build_columns(rows, basis.size(), column);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void BM_SparseMultiply(benchmark::State& state) {
  const MukaiExtension h = mukai_extend(kummer_lattice(2));
  const SymBasis basis(h, static_cast<unsigned>(state.range(0)));
  Rng rng(4);
  const QVector lambda = random_non_isotropic(rng, h.base().form(), 20);
  const SparseMatrix e = derivation_action(lefschetz_e(h, lambda), basis).matrix;
  const SparseMatrix f = derivation_action(adjoint_f(h, lambda), basis).matrix;
  for (auto _ : state) {
    SparseMatrix c = Parallel ? kernels::parallel::multiply(e, f) : kernels::serial::multiply(e, f);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(BM_DenseMultiply<false>)->Arg(16)->Arg(32)->Arg(64)->Name("dense_multiply/serial");
BENCHMARK(BM_DenseMultiply<true>)->Arg(16)->Arg(32)->Arg(64)->Name("dense_multiply/parallel");
BENCHMARK(BM_Rref<false>)->Arg(16)->Arg(32)->Name("rref/serial");
BENCHMARK(BM_Rref<true>)->Arg(16)->Arg(32)->Name("rref/parallel");
BENCHMARK(BM_LaplacianAssembly<false>)->Arg(3)->Arg(4)->Arg(5)->Name("laplacian_assembly/serial");
BENCHMARK(BM_LaplacianAssembly<true>)->Arg(3)->Arg(4)->Arg(5)->Name("laplacian_assembly/parallel");
BENCHMARK(BM_SparseMultiply<false>)->Arg(3)->Arg(4)->Name("sym_operator_product/serial");
BENCHMARK(BM_SparseMultiply<true>)->Arg(3)->Arg(4)->Name("sym_operator_product/parallel");

BENCHMARK_MAIN();

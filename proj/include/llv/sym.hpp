#pragma once

// Symmetric powers Sym^n of a Mukai extension: derivation action of so(H~),
// the Laplacian, its kernel S_[n] and the sl2 checks run on it.

#include "llv/lattice.hpp"
#include "llv/sparse.hpp"

#include <map>
#include <optional>
#include <vector>

namespace llv {

/// Exponent vector (m_0, ..., m_{d-1}) of a monomial in the basis of H~.
using MultiIndex = std::vector<unsigned>;

/// C(d + n - 1, n); d >= 1.
Integer sym_dim(unsigned d, unsigned n);

/// Monomial basis of Sym^n H~ in descending lexicographic order of exponent
/// vectors: alpha^n is the first element and beta^n the last.
class SymBasis {
 public:
  SymBasis(MukaiExtension h, unsigned n);

  const MukaiExtension& space() const { return h_; }
  unsigned degree() const { return n_; }
  std::size_t vars() const { return h_.dim(); }
  std::size_t size() const { return monomials_.size(); }

  const MultiIndex& monomial(std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(const MultiIndex& m) const;
  /// h-eigenvalue 2(c - a), a and c the alpha and beta exponents.
  int weight(std::size_t i) const;
  std::vector<std::size_t> indices_of_weight(int w) const;
  /// True iff the monomial only involves base variables.
  bool is_degree_zero_part(std::size_t i) const;

  std::size_t alpha_power_index() const { return 0; }
  std::size_t beta_power_index() const { return size() - 1; }

 private:
  MukaiExtension h_;
  unsigned n_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> index_;
};

/// Element of Sym^n H~ as coefficients on SymBasis indices.
class SymVector {
 public:
  SymVector() = default;
  explicit SymVector(SparseVector coeffs);

  const SparseVector& coeffs() const { return coeffs_; }
  Rational coefficient(std::size_t index) const;
  Rational coefficient(const SymBasis& basis, const MultiIndex& m) const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const SymVector&, const SymVector&) = default;

 private:
  SparseVector coeffs_;
};

SymVector operator*(const Rational& s, const SymVector& v);
SymVector operator-(const SymVector& a, const SymVector& b);

/// Operator on Sym^n H~ tagged with its degree.
struct SymOperator {
  SparseMatrix matrix;
  int degree = 0;
};

SymVector apply(const SymOperator& op, const SymVector& v);

/// Column j of the derivation extension of `op` (a matrix on H~) to Sym^n.
SparseVector derivation_column(const QMatrix& op, const SymBasis& basis, std::size_t j);
/// Leibniz extension of a graded operator on H~ to Sym^n H~.
SymOperator derivation_action(const GradedOperator& op, const SymBasis& basis);

/// Column j of the Laplacian; rows index SymBasis(space, n - 2).
SparseVector laplacian_column(const SymBasis& basis, std::size_t j);
/// Delta: x1...xn -> sum_{i<j} q(xi, xj) x1..^i..^j..xn as a matrix from
/// SymBasis(space, n) to SymBasis(space, n - 2). PreconditionError for n < 2.
SparseMatrix laplacian(const SymBasis& basis);

/// Basis of ker(Delta) restricted to the monomials of h-weight w.
std::vector<SymVector> s_n_kernel_weight(const SymBasis& basis, const SparseMatrix& delta, int w);
/// Basis of S_[n] = ker(Delta), assembled weight by weight (Delta preserves weight).
std::vector<SymVector> s_n_kernel(const SymBasis& basis);

/// alpha^n / n!.
SymVector psi_unit(const SymBasis& basis);

struct LefschetzLevel {
  unsigned j = 0;
  std::size_t source_dim = 0;  // dim of ker(Delta) in weight -2j
  std::size_t target_dim = 0;  // dim of ker(Delta) in weight +2j
  std::size_t rank = 0;        // rank of E^{2j} from source to target
  bool full_rank() const { return rank == source_dim && rank == target_dim; }
};

struct HardLefschetzReport {
  /// False for isotropic f: the levels are still computed but no sl2 exists.
  bool supported = true;
  std::vector<LefschetzLevel> levels;
  bool all_full_rank() const;
  bool dims_symmetric() const;
};

/// For j = 1..n, the rank of E_f^{2j}: ker(Delta)_{-2j} -> ker(Delta)_{+2j}.
HardLefschetzReport hard_lefschetz_check(const SymBasis& basis, const QVector& f);

struct FujikiResult {
  /// Model constant C with E_f^{2n}(alpha^n/n!) = C q(f,f)^n beta^n; unset for isotropic f.
  std::optional<Rational> model_constant;
  Rational beta_coefficient;
  bool isotropic = false;
};

FujikiResult fujiki_coefficient(const SymBasis& basis, const QVector& f);

/// Class of the form in Sym^2 of the base: sum_kl (G^-1)_kl e_k e_l. Requires n = 2.
SymVector bbf_dual_class(const SymBasis& basis);

/// Scalar c with t = c * bbf_dual_class, or nullopt. t must live on base-only monomials.
std::optional<Rational> is_multiple_of_bbf(const SymBasis& basis, const SymVector& t);

}  // namespace llv

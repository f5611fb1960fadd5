#pragma once

#include "llv/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace llv {

/// Finite-rank rational lattice with a non-degenerate symmetric form (an H^2 with its BBF form).
class BBFLattice {
 public:
  /// Throws PreconditionError for a degenerate form. Labels default to "e0", "e1", ...
  explicit BBFLattice(BilinearForm form, std::vector<std::string> labels = {});

  std::size_t rank() const { return form_.size(); }
  const BilinearForm& form() const { return form_; }
  const QMatrix& gram() const { return form_.gram(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Signature& signature() const { return signature_; }

  Rational q(const QVector& x, const QVector& y) const { return form_(x, y); }

 private:
  BilinearForm form_;
  std::vector<std::string> labels_;
  Signature signature_;
};

/// The hyperbolic plane U = [[0,1],[1,0]].
BBFLattice hyperbolic_plane();
/// <d1> + <d2> + ...
BBFLattice diagonal_lattice(const std::vector<Rational>& diag);
BBFLattice direct_sum(const std::vector<BBFLattice>& parts);
/// U + U + U + <-2(n+1)>, the BBF lattice of generalised Kummer type; n >= 2.
BBFLattice kummer_lattice(int n);

/// Parses "U", "diag(k1,...)", "kummer(n)" and "direct_sum(expr, ...)".
BBFLattice lattice_from_expression(std::string_view expr);

/// Mukai extension Q.alpha + base + Q.beta in basis order (alpha, base..., beta).
///
/// alpha and beta are isotropic, orthogonal to the base, and pair to -1. The
/// grading puts alpha in degree -2, the base in degree 0 and beta in degree 2.
class MukaiExtension {
 public:
  explicit MukaiExtension(BBFLattice base);

  const BBFLattice& base() const { return base_; }
  const BilinearForm& pairing() const { return pairing_; }
  std::size_t dim() const { return pairing_.size(); }
  std::size_t alpha_index() const { return 0; }
  std::size_t beta_index() const { return dim() - 1; }
  int degree_of(std::size_t basis_index) const;

  QVector alpha() const { return QVector::unit(dim(), alpha_index()); }
  QVector beta() const { return QVector::unit(dim(), beta_index()); }

  /// Accepts a vector of base rank, or a vector of dim() with zero alpha/beta parts.
  /// Returns its image in the extension; PreconditionError otherwise.
  QVector embed(const QVector& lambda) const;
  /// Degree-0 coordinates of a vector of the extension.
  QVector base_part(const QVector& x) const;
  bool in_base(const QVector& x) const;

  Rational q(const QVector& x, const QVector& y) const { return pairing_(x, y); }

 private:
  BBFLattice base_;
  BilinearForm pairing_;
};

MukaiExtension mukai_extend(const BBFLattice& base);

/// Matrix on the Mukai extension tagged with the degree it shifts the grading by.
struct GradedOperator {
  QMatrix matrix;
  int degree = 0;
};

/// e_lambda: alpha -> lambda, mu -> q(lambda, mu) beta, beta -> 0.
GradedOperator lefschetz_e(const MukaiExtension& h, const QVector& lambda);
/// -2 on alpha, 0 on the base, +2 on beta.
GradedOperator grading_h(const MukaiExtension& h);
/// f_lambda completing (e_lambda, h, f_lambda) to an sl2-triple; scale 2/q(lambda, lambda).
/// Throws PreconditionError for isotropic lambda.
GradedOperator adjoint_f(const MukaiExtension& h, const QVector& lambda);

/// True iff q(Mx, y) + q(x, My) = 0 on all basis pairs.
bool so_membership(const MukaiExtension& h, const QMatrix& m);
bool so_membership(const BilinearForm& form, const QMatrix& m);
/// True iff q(Mx, My) = q(x, y) on all basis pairs.
bool is_isometry(const BilinearForm& form, const QMatrix& m);
bool is_isometry(const MukaiExtension& h, const QMatrix& m);
bool is_isometry(const BBFLattice& l, const QMatrix& m);
/// Isometry between two spaces: q_to(Mx, My) = q_from(x, y).
bool is_isometry(const BilinearForm& from, const BilinearForm& to, const QMatrix& m);

/// Whether the matrix sends each graded piece into the piece shifted by op.degree.
bool respects_grading(const MukaiExtension& h, const GradedOperator& op);

/// exp of a nilpotent matrix as a finite sum; PreconditionError if not nilpotent.
QMatrix exp_nilpotent(const QMatrix& n);

/// Reflection x -> x - 2 q(x,v)/q(v,v) v; an isometry for any non-isotropic v.
QMatrix reflection(const BilinearForm& form, const QVector& v);

}  // namespace llv

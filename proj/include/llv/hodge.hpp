#pragma once

// Lattice-level Hodge theory: period points, Hodge isometries, B-fields,
// kappa classes, degree-reversing isometries and twistor spaces.

#include "llv/lattice.hpp"

#include <array>
#include <optional>
#include <vector>

namespace llv {

/// sigma = x + i y in Lambda (x) C, held as its rational real and imaginary parts.
struct PeriodPoint {
  QVector x;
  QVector y;
};

/// q(x,x) = q(y,y) > 0 and q(x,y) = 0, i.e. q(sigma,sigma) = 0 and q(sigma, conj sigma) > 0.
bool is_period_point(const BBFLattice& l, const QVector& x, const QVector& y);
inline bool is_period_point(const BBFLattice& l, const PeriodPoint& p) { return is_period_point(l, p.x, p.y); }

enum class IsometryLevel { Lattice, Mukai };

/// Isometry either of the lattice or of its Mukai extension.
///
/// The orientation sign is the user-supplied flag for the even-n sign ambiguity
/// of lifting isometries to the Mukai extension; it is carried, never derived.
struct HodgeIsometry {
  QMatrix matrix;
  IsometryLevel level = IsometryLevel::Lattice;
  int orientation_sign = 1;
};

/// (a, b) with psi(sigma_X) = (a + i b) sigma_Y.
struct HodgeScalar {
  Rational a;
  Rational b;
};

/// Solves psi(x_X) = a x_Y - b y_Y, psi(y_X) = b x_Y + a y_Y. PreconditionError if psi is not an isometry.
std::optional<HodgeScalar> hodge_isometry_scalar(const BBFLattice& l, const QMatrix& psi, const PeriodPoint& sigma_x,
                                                 const PeriodPoint& sigma_y);
bool is_hodge_isometry(const BBFLattice& l, const QMatrix& psi, const PeriodPoint& sigma_x,
                       const PeriodPoint& sigma_y);

/// B_lambda = exp(e_lambda) = 1 + e + e^2/2.
QMatrix bfield(const MukaiExtension& h, const QVector& lambda);

/// Rank and the two halves of c1 of a Fourier-Mukai kernel.
struct ChernData {
  Integer r;
  QVector lambda_x;
  QVector lambda_y;
};

/// B_{-lambda_Y/r} . Phi . B_{-lambda_X/r}. PreconditionError unless r > 0 and Phi is a Mukai isometry.
HodgeIsometry phi_kappa(const MukaiExtension& hx, const MukaiExtension& hy, const HodgeIsometry& phi,
                        const ChernData& cd);

/// phi(alpha_X) in span(beta_Y) and phi(beta_X) in span(alpha_Y).
bool check_degree_reversing(const MukaiExtension& hx, const MukaiExtension& hy, const QMatrix& phi);

/// The swap alpha <-> beta, identity on the base.
QMatrix swap_isometry(const MukaiExtension& h);
/// alpha -> s beta, beta -> s^-1 alpha, base -> phi0. An isometry iff phi0 is.
QMatrix degree_reversing_isometry(const MukaiExtension& h, const Rational& s, const QMatrix& phi0);
/// Degree-0 block of a Mukai-level matrix.
QMatrix degree_zero_block(const MukaiExtension& h, const QMatrix& phi);

struct LscCertificate {
  /// phi^-1 e_{phi0(f)} phi.
  QMatrix conjugate;
  /// c with conjugate = c f_f exactly.
  Rational scalar;
};

/// Conjugates the Lefschetz operator of phi0(f) back through a degree-reversing phi
/// and certifies it as a nonzero multiple of the adjoint operator f_f.
/// PreconditionError for non-degree-reversing phi or isotropic inputs; Error if no scalar exists.
LscCertificate lsc_certificate(const MukaiExtension& hx, const MukaiExtension& hy, const QMatrix& phi,
                               const QVector& f);
LscCertificate lsc_certificate(const MukaiExtension& h, const QMatrix& phi, const QVector& f);

/// Mukai vector (v0, v2, v4) of an abelian surface.
struct MukaiVectorAb {
  Rational v0;
  QVector v2;
  Rational v4;
  friend bool operator==(const MukaiVectorAb&, const MukaiVectorAb&) = default;
};

/// <v, w> = g2(v2, w2) - v0 w4 - v4 w0.
Rational mukai_pairing_ab(const BilinearForm& g2, const MukaiVectorAb& v, const MukaiVectorAb& w);

/// ch(E) exp(-c1/r) truncated to degree 4: (r, 0, ch2 - g2(c1,c1)/(2r)).
MukaiVectorAb kappa_of_chern(const Integer& r, const QVector& c1, const Rational& ch2, const BilinearForm& g2);

/// span(Re sigma, Im sigma, omega) with its positive-definite Gram.
struct TwistorSpace {
  std::array<QVector, 3> basis;
  QMatrix gram;
};

TwistorSpace twistor_space(const BBFLattice& l, const PeriodPoint& sigma, const QVector& omega);

struct DiagonalTwistor {
  TwistorSpace source;
  TwistorSpace image;
  /// Columns: psi applied to the source basis, i.e. the graph of psi restricted to W.
  QMatrix graph;
};

/// Twistor space at (sigma, omega) and its image under a Hodge isometry psi.
DiagonalTwistor diagonal_twistor(const BBFLattice& l, const QMatrix& psi, const PeriodPoint& sigma,
                                 const QVector& omega);

/// Positive-cone surrogate for Kahler-cone compatibility:
/// q(psi w, psi w) > 0 and q(psi w, witness) > 0.
bool kahler_cone_compatible(const BBFLattice& l, const QMatrix& psi, const QVector& omega, const QVector& witness);

/// Rank of the rational classes orthogonal to sigma (the Picard lattice at sigma).
std::size_t picard_rank(const BBFLattice& l, const PeriodPoint& sigma);
/// Every point has trivial Picard lattice. For rational period data this is
/// never the case when rank >= 3; the predicate reports it honestly.
bool is_generic_path(const BBFLattice& l, const std::vector<PeriodPoint>& path);

}  // namespace llv

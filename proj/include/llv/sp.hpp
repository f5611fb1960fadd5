#pragma once

// Coefficient-level model of the permutation-invariant symplectic groups of an
// abelian variety W and its dual: 2x2 blocks over the generators, their
// realization in GL2(Q), the tilde involution and the Gamma0 embedding.

#include "llv/linalg.hpp"

#include <vector>

namespace llv {

/// n >= 2 and the exponent e >= 1 of the polarisation; E = e(n+1).
struct SpParams {
  int n = 2;
  Integer e = 1;
  Integer E() const { return e * (n + 1); }
};

/// Throws PreconditionError unless n >= 2 and e >= 1.
void validate(const SpParams& p);

/// Coefficients of (Id, lambda^delta x phi0^, lambda x phi0, Id) in block order
/// top-left, top-right, bottom-left, bottom-right.
struct SpElement {
  Rational a1;
  Rational a2;
  Rational a3;
  Rational a4;

  static SpElement identity() { return {1, 0, 0, 1}; }
  bool is_integral() const;
  friend bool operator==(const SpElement&, const SpElement&) = default;
};

/// [[a1, a2], [E a3, a4]]. The composition constants make this multiplicative.
QMatrix realize(const SpParams& p, const SpElement& f);
/// Inverse of realize on 2x2 matrices: (m00, m01, m10/E, m11).
SpElement from_realization(const SpParams& p, const QMatrix& m);

/// (a4, -a2, -a3, a1); realizes to the adjugate.
SpElement tilde(const SpElement& f);

/// det(realize(f)) = 1, equivalently tilde(f) o f = id.
bool is_symplectic(const SpParams& p, const SpElement& f);

/// The element whose realization is realize(f) . realize(g). Throws Error if
/// integral inputs produce a non-integral result.
SpElement compose(const SpParams& p, const SpElement& f, const SpElement& g);

/// det m = 1, m integral, and N | m10.
bool gamma0_member(const Integer& level, const QMatrix& m);
/// PreconditionError unless gamma0_member(E, m).
SpElement gamma0_embed(const SpParams& p, const QMatrix& m);

/// Element of the torsor of symplectic isomorphisms W x W^ -> W^ x W, by the
/// coefficients of (lambda x phi0, Id, Id, lambda^delta x phi0^).
struct SpTorsorElement {
  Rational c1;
  Rational c2;
  Rational c3;
  Rational c4;
  friend bool operator==(const SpTorsorElement&, const SpTorsorElement&) = default;
};

/// [[E c1, c2], [c3, c4]]; realize_torsor(g o f) = realize_torsor(g) . realize(f).
QMatrix realize_torsor(const SpParams& p, const SpTorsorElement& g);
/// tilde(g) o g = det(realize_torsor(g)) Id.
bool is_symplectic(const SpParams& p, const SpTorsorElement& g);

/// Right action of the invariant group on the torsor.
SpTorsorElement act(const SpParams& p, const SpTorsorElement& g, const SpElement& f);

/// tilde(h) o g as an element of the invariant group: adj(R(h)) . R(g) pulled back.
SpElement transition(const SpParams& p, const SpTorsorElement& h, const SpTorsorElement& g);

/// A torsor element of the shape (1/(n+1), -s2/(n+1), -s3/(n+1), m2 s4) together
/// with the scalars chosen for the mistyped generators.
struct GCandidate {
  SpTorsorElement g;
  Rational s2;
  Rational s3;
  Rational s4;
};

struct GSearchReport {
  ExtGcd coefficients;
  std::vector<Rational> scalars;
  std::size_t tried = 0;
  std::vector<GCandidate> candidates;
  /// Whether each coefficient is an actual homomorphism is geometric and never checked.
  bool integrality_assumed = true;
};

/// Enumerates s2, s3, s4 over {+-1, +-(n+1)^+-1, +-e^+-1, +-E^+-1} in a fixed
/// order and keeps the symplectic assignments. PreconditionError if gcd(e, n+1) != 1.
GSearchReport g_candidate_search(const SpParams& p);

}  // namespace llv

#include "llv/sp.hpp"

#include "llv/errors.hpp"

#include <algorithm>

namespace llv {

namespace {

QMatrix adjugate(const QMatrix& m) {
  return QMatrix::from_rows({{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}});
}

Rational det2(const QMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

void validate(const SpParams& p) {
  if (p.n < 2) throw PreconditionError("SpParams: n must be at least 2");
  if (p.e < 1) throw PreconditionError("SpParams: e must be positive");
}

bool SpElement::is_integral() const {
  return llv::is_integer(a1) && llv::is_integer(a2) && llv::is_integer(a3) && llv::is_integer(a4);
}

QMatrix realize(const SpParams& p, const SpElement& f) {
  return QMatrix::from_rows({{f.a1, f.a2}, {Rational(p.E()) * f.a3, f.a4}});
}

SpElement from_realization(const SpParams& p, const QMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("from_realization: expected a 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 0) / Rational(p.E()), m(1, 1)};
}

SpElement tilde(const SpElement& f) { return {f.a4, -f.a2, -f.a3, f.a1}; }

bool is_symplectic(const SpParams& p, const SpElement& f) {
  const QMatrix r = realize(p, f);
  const bool det_one = det2(r) == 1;
  // realize(tilde f) is the adjugate, so the two conditions agree by construction
  const bool inverse_is_tilde = realize(p, tilde(f)) * r == QMatrix::identity(2);
  if (det_one != inverse_is_tilde) throw Error("is_symplectic: determinant and tilde conditions disagree");
  return det_one;
}

SpElement compose(const SpParams& p, const SpElement& f, const SpElement& g) {
  SpElement out = from_realization(p, realize(p, f) * realize(p, g));
  if (f.is_integral() && g.is_integral() && !out.is_integral())
    throw Error("compose: integral inputs gave a non-integral element");
  return out;
}

bool gamma0_member(const Integer& level, const QMatrix& m) {
  if (level <= 0) throw PreconditionError("gamma0_member: level must be positive");
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("gamma0_member: expected a 2x2 matrix");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!is_integer(m(i, j))) return false;
  if (det2(m) != 1) return false;
  const Integer lower = m(1, 0).get_num();
  return mpz_divisible_p(lower.get_mpz_t(), level.get_mpz_t()) != 0;
}

SpElement gamma0_embed(const SpParams& p, const QMatrix& m) {
  if (!gamma0_member(p.E(), m)) throw PreconditionError("gamma0_embed: matrix is not in Gamma0(E)");
  return from_realization(p, m);
}

QMatrix realize_torsor(const SpParams& p, const SpTorsorElement& g) {
  return QMatrix::from_rows({{Rational(p.E()) * g.c1, g.c2}, {g.c3, g.c4}});
}

bool is_symplectic(const SpParams& p, const SpTorsorElement& g) { return det2(realize_torsor(p, g)) == 1; }

SpTorsorElement act(const SpParams& p, const SpTorsorElement& g, const SpElement& f) {
  const QMatrix m = realize_torsor(p, g) * realize(p, f);
  return {m(0, 0) / Rational(p.E()), m(0, 1), m(1, 0), m(1, 1)};
}

SpElement transition(const SpParams& p, const SpTorsorElement& h, const SpTorsorElement& g) {
  return from_realization(p, adjugate(realize_torsor(p, h)) * realize_torsor(p, g));
}

GSearchReport g_candidate_search(const SpParams& p) {
  validate(p);
  const Integer k = p.n + 1;
  GSearchReport report;
  report.coefficients = ext_gcd(p.e, k);
  if (report.coefficients.g != 1) throw PreconditionError("g_candidate_search: gcd(e, n+1) must be 1");

  for (const Integer& base : {Integer(1), k, p.e, p.E()}) {
    for (const Rational& s : {Rational(base), Rational(1 / Rational(base))}) {
      for (const Rational& signed_s : {s, Rational(-s)}) {
        if (std::find(report.scalars.begin(), report.scalars.end(), signed_s) == report.scalars.end())
          report.scalars.push_back(signed_s);
      }
    }
  }

  const Rational inv_k = 1 / Rational(k);
  const Rational m2(report.coefficients.m2);
  for (const Rational& s2 : report.scalars)
    for (const Rational& s3 : report.scalars)
      for (const Rational& s4 : report.scalars) {
        ++report.tried;
        SpTorsorElement g{inv_k, -s2 * inv_k, -s3 * inv_k, m2 * s4};
        if (is_symplectic(p, g)) report.candidates.push_back({std::move(g), s2, s3, s4});
      }
  return report;
}

}  // namespace llv

#include "llv/hodge.hpp"

#include "llv/errors.hpp"

namespace llv {

namespace {

void require_dim(const QVector& v, std::size_t d, const char* what) {
  if (v.dim() != d) throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(d));
}

QVector stack(const QVector& top, const QVector& bottom) {
  QVector v(top.dim() + bottom.dim());
  for (std::size_t i = 0; i < top.dim(); ++i) v[i] = top[i];
  for (std::size_t i = 0; i < bottom.dim(); ++i) v[top.dim() + i] = bottom[i];
  return v;
}

}  // namespace

bool is_period_point(const BBFLattice& l, const QVector& x, const QVector& y) {
  require_dim(x, l.rank(), "period point x");
  require_dim(y, l.rank(), "period point y");
  const Rational xx = l.q(x, x);
  return xx == l.q(y, y) && sgn(l.q(x, y)) == 0 && sgn(xx) > 0;
}

std::optional<HodgeScalar> hodge_isometry_scalar(const BBFLattice& l, const QMatrix& psi, const PeriodPoint& sx,
                                                 const PeriodPoint& sy) {
  if (!is_isometry(l, psi)) throw PreconditionError("hodge_isometry_scalar: psi is not an isometry");
  if (!is_period_point(l, sx) || !is_period_point(l, sy))
    throw PreconditionError("hodge_isometry_scalar: invalid period point");
  const QMatrix system = QMatrix::from_columns({stack(sy.x, sy.y), stack(-sy.y, sy.x)});
  const auto ab = solve(system, stack(psi.apply(sx.x), psi.apply(sx.y)));
  if (!ab || ab->is_zero()) return std::nullopt;
  return HodgeScalar{(*ab)[0], (*ab)[1]};
}

bool is_hodge_isometry(const BBFLattice& l, const QMatrix& psi, const PeriodPoint& sx, const PeriodPoint& sy) {
  return hodge_isometry_scalar(l, psi, sx, sy).has_value();
}

QMatrix bfield(const MukaiExtension& h, const QVector& lambda) {
  const QMatrix e = lefschetz_e(h, lambda).matrix;
  return QMatrix::identity(h.dim()) + e + Rational(1, 2) * (e * e);
}

HodgeIsometry phi_kappa(const MukaiExtension& hx, const MukaiExtension& hy, const HodgeIsometry& phi,
                        const ChernData& cd) {
  if (cd.r <= 0) throw PreconditionError("phi_kappa: rank r must be positive");
  if (phi.level != IsometryLevel::Mukai) throw PreconditionError("phi_kappa: expected a Mukai-level isometry");
  if (!is_isometry(hx.pairing(), hy.pairing(), phi.matrix))
    throw PreconditionError("phi_kappa: Phi is not an isometry of the Mukai pairings");
  const Rational inv_r = make_rational(1, cd.r);
  const QMatrix bx = bfield(hx, -inv_r * hx.embed(cd.lambda_x));
  const QMatrix by = bfield(hy, -inv_r * hy.embed(cd.lambda_y));
  return {by * phi.matrix * bx, IsometryLevel::Mukai, phi.orientation_sign};
}

bool check_degree_reversing(const MukaiExtension& hx, const MukaiExtension& hy, const QMatrix& phi) {
  if (phi.rows() != hy.dim() || phi.cols() != hx.dim()) throw DimensionError("check_degree_reversing: size mismatch");
  const QVector img_alpha = phi.column(hx.alpha_index());
  const QVector img_beta = phi.column(hx.beta_index());
  auto only_at = [](const QVector& v, std::size_t k) {
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (i != k && sgn(v[i]) != 0) return false;
    return sgn(v[k]) != 0;
  };
  return only_at(img_alpha, hy.beta_index()) && only_at(img_beta, hy.alpha_index());
}

QMatrix swap_isometry(const MukaiExtension& h) {
  return degree_reversing_isometry(h, 1, QMatrix::identity(h.base().rank()));
}

QMatrix degree_reversing_isometry(const MukaiExtension& h, const Rational& s, const QMatrix& phi0) {
  if (sgn(s) == 0) throw PreconditionError("degree_reversing_isometry: zero scale");
  const std::size_t r = h.base().rank();
  if (phi0.rows() != r || phi0.cols() != r) throw DimensionError("degree_reversing_isometry: phi0 size mismatch");
  QMatrix m(h.dim(), h.dim());
  m(h.beta_index(), h.alpha_index()) = s;
  m(h.alpha_index(), h.beta_index()) = 1 / s;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i + 1, j + 1) = phi0(i, j);
  return m;
}

QMatrix degree_zero_block(const MukaiExtension& h, const QMatrix& phi) {
  const std::size_t r = h.base().rank();
  if (phi.rows() != h.dim() || phi.cols() != h.dim()) throw DimensionError("degree_zero_block: size mismatch");
  QMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = phi(i + 1, j + 1);
  return b;
}

LscCertificate lsc_certificate(const MukaiExtension& hx, const MukaiExtension& hy, const QMatrix& phi,
                               const QVector& f) {
  if (!check_degree_reversing(hx, hy, phi)) throw PreconditionError("lsc_certificate: phi is not degree-reversing");
  const QVector fx = hx.embed(f);
  if (sgn(hx.q(fx, fx)) == 0) throw PreconditionError("lsc_certificate: f is isotropic");
  const auto phi_inv = inverse(phi);
  if (!phi_inv) throw PreconditionError("lsc_certificate: phi is not invertible");
  // phi sends the base of X into the base of Y, so phi(f) is the image of f under the degree-0 block
  const QVector fy = phi.apply(fx);
  if (!hy.in_base(fy)) throw PreconditionError("lsc_certificate: phi does not preserve the degree-0 part");
  if (sgn(hy.q(fy, fy)) == 0) throw PreconditionError("lsc_certificate: phi0(f) is isotropic");

  QMatrix conj = *phi_inv * lefschetz_e(hy, fy).matrix * phi;
  const QMatrix adj = adjoint_f(hx, fx).matrix;
  std::optional<Rational> scalar;
  for (std::size_t i = 0; i < adj.rows() && !scalar; ++i)
    for (std::size_t j = 0; j < adj.cols() && !scalar; ++j)
      if (sgn(adj(i, j)) != 0) scalar = conj(i, j) / adj(i, j);
  if (!scalar || sgn(*scalar) == 0 || !(conj - *scalar * adj).is_zero())
    throw Error("lsc_certificate: conjugated operator is not a multiple of the adjoint Lefschetz operator");
  return {std::move(conj), *scalar};
}

LscCertificate lsc_certificate(const MukaiExtension& h, const QMatrix& phi, const QVector& f) {
  return lsc_certificate(h, h, phi, f);
}

Rational mukai_pairing_ab(const BilinearForm& g2, const MukaiVectorAb& v, const MukaiVectorAb& w) {
  return g2(v.v2, w.v2) - v.v0 * w.v4 - v.v4 * w.v0;
}

MukaiVectorAb kappa_of_chern(const Integer& r, const QVector& c1, const Rational& ch2, const BilinearForm& g2) {
  if (r <= 0) throw PreconditionError("kappa_of_chern: rank must be positive");
  require_dim(c1, g2.size(), "kappa_of_chern c1");
  return {Rational(r), QVector(c1.dim()), ch2 - g2(c1, c1) / (2 * Rational(r))};
}

TwistorSpace twistor_space(const BBFLattice& l, const PeriodPoint& sigma, const QVector& omega) {
  require_dim(omega, l.rank(), "twistor omega");
  if (!is_period_point(l, sigma)) throw PreconditionError("twistor_space: invalid period point");
  if (sgn(l.q(omega, sigma.x)) != 0 || sgn(l.q(omega, sigma.y)) != 0)
    throw PreconditionError("twistor_space: omega is not orthogonal to the period plane");
  TwistorSpace w{{sigma.x, sigma.y, omega}, QMatrix(3, 3)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w.gram(i, j) = l.q(w.basis[i], w.basis[j]);
  if (!is_positive_definite(w.gram)) throw PreconditionError("twistor_space: Gram matrix is not positive definite");
  return w;
}

DiagonalTwistor diagonal_twistor(const BBFLattice& l, const QMatrix& psi, const PeriodPoint& sigma,
                                 const QVector& omega) {
  const PeriodPoint image_sigma{psi.apply(sigma.x), psi.apply(sigma.y)};
  if (!is_hodge_isometry(l, psi, sigma, image_sigma))
    throw PreconditionError("diagonal_twistor: psi is not a Hodge isometry onto psi(sigma)");
  DiagonalTwistor out{twistor_space(l, sigma, omega), twistor_space(l, image_sigma, psi.apply(omega)), {}};
  out.graph = QMatrix::from_columns({out.image.basis[0], out.image.basis[1], out.image.basis[2]});
  return out;
}

bool kahler_cone_compatible(const BBFLattice& l, const QMatrix& psi, const QVector& omega, const QVector& witness) {
  if (sgn(l.q(omega, omega)) <= 0) throw PreconditionError("kahler_cone_compatible: omega must have positive norm");
  if (sgn(l.q(witness, witness)) <= 0) throw PreconditionError("kahler_cone_compatible: witness must have positive norm");
  const QVector image = psi.apply(omega);
  return sgn(l.q(image, image)) > 0 && sgn(l.q(image, witness)) > 0;
}

std::size_t picard_rank(const BBFLattice& l, const PeriodPoint& sigma) {
  if (!is_period_point(l, sigma)) throw PreconditionError("picard_rank: invalid period point");
  QMatrix constraints(2, l.rank());
  const QVector gx = l.gram().apply(sigma.x);
  const QVector gy = l.gram().apply(sigma.y);
  for (std::size_t j = 0; j < l.rank(); ++j) {
    constraints(0, j) = gx[j];
    constraints(1, j) = gy[j];
  }
  return kernel_basis(constraints).size();
}

bool is_generic_path(const BBFLattice& l, const std::vector<PeriodPoint>& path) {
  for (const auto& p : path)
    if (picard_rank(l, p) != 0) return false;
  return true;
}

}  // namespace llv

#include "llv/random.hpp"

#include "llv/errors.hpp"

#include <limits>

namespace llv {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

Rational Rng::rational(unsigned bound) {
  if (bound == 0) throw PreconditionError("rational: bound must be positive");
  const auto b = static_cast<std::int64_t>(bound);
  const std::int64_t num = uniform_int(-b, b);
  const std::int64_t den = uniform_int(1, b);
  return make_rational(num, den);
}

Rational Rng::nonzero_rational(unsigned bound) {
  Rational r = rational(bound);
  while (sgn(r) == 0) r = rational(bound);
  return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

QVector random_vector(Rng& rng, std::size_t dim, unsigned bound) {
  QVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.rational(bound);
  return v;
}

QVector random_integral_vector(Rng& rng, std::size_t dim, unsigned bound) {
  QVector v(dim);
  const auto b = static_cast<std::int64_t>(bound);
  for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(static_cast<long>(rng.uniform_int(-b, b)));
  return v;
}

QVector random_non_isotropic(Rng& rng, const BilinearForm& form, unsigned bound, int sign) {
  for (;;) {
    QVector v = random_vector(rng, form.size(), bound);
    const int s = sgn(form.norm(v));
    if (s != 0 && (sign == 0 || (sign > 0) == (s > 0))) return v;
  }
}

std::optional<QVector> find_isotropic(const BilinearForm& form) {
  const QMatrix& g = form.gram();
  const std::size_t d = form.size();
  for (std::size_t i = 0; i < d; ++i)
    if (sgn(g(i, i)) == 0) return QVector::unit(d, i);
  // q(e_i + t e_j) = g_ii + 2 t g_ij + t^2 g_jj has a rational root iff the discriminant is a square
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Rational disc = g(i, j) * g(i, j) - g(i, i) * g(j, j);
      if (sgn(disc) < 0) continue;
      if (!mpz_perfect_square_p(disc.get_num_mpz_t()) || !mpz_perfect_square_p(disc.get_den_mpz_t())) continue;
      const Rational root(sqrt(disc.get_num()), sqrt(disc.get_den()));
      QVector v(d);
      v[i] = 1;
      v[j] = (-g(i, j) + root) / g(j, j);
      return v;
    }
  return std::nullopt;
}

QVector random_isotropic(Rng& rng, const BilinearForm& form, unsigned bound) {
  const auto x0 = find_isotropic(form);
  if (!x0) throw PreconditionError("random_isotropic: no isotropic vector found");
  for (;;) {
    const QVector w = random_vector(rng, form.size(), bound);
    QVector v = form.norm(w) * *x0 - (2 * form(w, *x0)) * w;
    if (!v.is_zero()) return v;
  }
}

QMatrix random_isometry(Rng& rng, const BilinearForm& form, unsigned bound, unsigned count) {
  QMatrix m = QMatrix::identity(form.size());
  for (unsigned k = 0; k < count; ++k) {
    QVector v;
    do v = random_integral_vector(rng, form.size(), bound);
    while (sgn(form.norm(v)) == 0);
    m = reflection(form, v) * m;
  }
  return m;
}

QMatrix random_so_element(Rng& rng, const BilinearForm& form, unsigned bound, unsigned terms) {
  const std::size_t d = form.size();
  QMatrix m(d, d);
  for (unsigned t = 0; t < terms; ++t) {
    const QVector u = random_vector(rng, d, bound);
    const QVector v = random_vector(rng, d, bound);
    const QVector gu = form.gram().apply(u);
    const QVector gv = form.gram().apply(v);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) += u[i] * gv[j] - v[i] * gu[j];
  }
  return m;
}

DegreeReversingSample random_degree_reversing(Rng& rng, const MukaiExtension& h, unsigned bound) {
  DegreeReversingSample s;
  s.scale = rng.nonzero_rational(bound);
  s.base_block = random_isometry(rng, h.base().form(), bound);
  s.matrix = degree_reversing_isometry(h, s.scale, s.base_block);
  return s;
}

SpElement random_integral_sp_element(Rng& rng, unsigned bound) {
  const auto b = static_cast<std::int64_t>(bound);
  auto draw = [&] { return Rational(static_cast<long>(rng.uniform_int(-b, b))); };
  SpElement f;
  f.a1 = draw();
  f.a2 = draw();
  f.a3 = draw();
  f.a4 = draw();
  return f;
}

QMatrix random_gamma0(Rng& rng, const Integer& level, unsigned bound, unsigned length) {
  const auto b = static_cast<std::int64_t>(bound);
  QMatrix m = QMatrix::identity(2);
  for (unsigned k = 0; k < length; ++k) {
    const Rational t(static_cast<long>(rng.uniform_int(-b, b)));
    QMatrix step = QMatrix::identity(2);
    if (k % 2 == 0)
      step(0, 1) = t;
    else
      step(1, 0) = Rational(level) * t;
    m = m * step;
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> coordinate_hyperbolic_planes(const BBFLattice& l) {
  const QMatrix& g = l.gram();
  const std::size_t d = l.rank();
  auto isolated_pair = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < d; ++k) {
      if (k == i || k == j) continue;
      if (sgn(g(i, k)) != 0 || sgn(g(j, k)) != 0) return false;
    }
    return true;
  };
  std::vector<std::pair<std::size_t, std::size_t>> planes;
  std::vector<bool> used(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    if (used[i] || sgn(g(i, i)) != 0) continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (used[j] || sgn(g(j, j)) != 0 || g(i, j) != 1 || !isolated_pair(i, j)) continue;
      planes.emplace_back(i, j);
      used[i] = used[j] = true;
      break;
    }
  }
  return planes;
}

std::optional<TwistorWitness> twistor_witness(const BBFLattice& l) {
  const auto planes = coordinate_hyperbolic_planes(l);
  if (planes.size() < 3) return std::nullopt;
  auto norm_two = [&](std::size_t k) {
    QVector v(l.rank());
    v[planes[k].first] = 1;
    v[planes[k].second] = 1;
    return v;
  };
  return TwistorWitness{{norm_two(0), norm_two(1)}, norm_two(2)};
}

}  // namespace llv

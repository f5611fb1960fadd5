#include "oracles.hpp"

#include "llv/errors.hpp"
#include "llv/lattice.hpp"
#include "llv/random.hpp"

#include <doctest.h>

using namespace llv;

TEST_CASE("kummer lattice shape") {
  for (int n : {2, 3, 4}) {
    const BBFLattice l = kummer_lattice(n);
    CHECK(l.rank() == 7);
    CHECK(l.gram()(6, 6) == -2 * (n + 1));
    CHECK(determinant(l.gram()) == 2 * (n + 1));
    CHECK(l.signature() == Signature{3, 4, 0});
    const auto ref = oracle::inertia_by_descartes(l.gram());
    CHECK(ref.positive == 3);
    CHECK(ref.negative == 4);
  }
  CHECK_THROWS_AS(kummer_lattice(1), PreconditionError);
}

TEST_CASE("lattice expressions") {
  CHECK(lattice_from_expression("kummer(2)").gram() == kummer_lattice(2).gram());
  const BBFLattice l = lattice_from_expression("direct_sum(U, U, diag(-2, 4))");
  CHECK(l.rank() == 6);
  CHECK(l.signature() == Signature{3, 3, 0});
  CHECK(lattice_from_expression(" U ").gram() == hyperbolic_plane().gram());
  CHECK_THROWS_AS(lattice_from_expression("kumer(2)"), ParseError);
  CHECK_THROWS_AS(lattice_from_expression("diag(1,"), ParseError);
  CHECK_THROWS_AS(lattice_from_expression("diag(1, 0)"), PreconditionError);
}

TEST_CASE("Mukai extension pairing and grading") {
  const MukaiExtension h = mukai_extend(kummer_lattice(2));
  CHECK(h.dim() == 9);
  CHECK(h.q(h.alpha(), h.beta()) == -1);
  CHECK(h.q(h.alpha(), h.alpha()) == 0);
  CHECK(h.q(h.beta(), h.beta()) == 0);
  CHECK(h.degree_of(0) == -2);
  CHECK(h.degree_of(4) == 0);
  CHECK(h.degree_of(8) == 2);
  const QVector lambda{1, 2, 0, 0, 0, 0, 1};
  const QVector e = h.embed(lambda);
  CHECK(h.q(e, h.alpha()) == 0);
  CHECK(h.q(e, e) == kummer_lattice(2).q(lambda, lambda));
  CHECK(h.base_part(e) == lambda);
  CHECK_THROWS_AS(h.embed(h.alpha()), PreconditionError);
  CHECK_THROWS_AS(h.embed(QVector{1, 2}), DimensionError);
}

TEST_CASE("sl2 triple on explicit lambda") {
  const MukaiExtension h = mukai_extend(kummer_lattice(2));
  const QVector lambda{1, 1, 0, 0, 0, 0, 0};  // norm 2
  const QMatrix e = lefschetz_e(h, lambda).matrix;
  const QMatrix f = adjoint_f(h, lambda).matrix;
  const QMatrix hh = grading_h(h).matrix;
  CHECK(e.apply(h.alpha()) == h.embed(lambda));
  CHECK(e.apply(h.embed(lambda)) == Rational(2) * h.beta());
  CHECK(e.apply(h.beta()).is_zero());
  CHECK(f.apply(h.beta()) == h.embed(lambda));
  CHECK(commutator(e, f) == hh);
  CHECK(commutator(hh, e) == Rational(2) * e);
  CHECK(commutator(hh, f) == Rational(-2) * f);
  CHECK_THROWS_AS(adjoint_f(h, QVector{1, 0, 0, 0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("so membership, isometries and gradings") {
  const MukaiExtension h = mukai_extend(kummer_lattice(3));
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const QVector lambda = random_non_isotropic(rng, h.base().form(), 20);
    const GradedOperator e = lefschetz_e(h, lambda);
    const GradedOperator f = adjoint_f(h, lambda);
    CHECK(so_membership(h, e.matrix));
    CHECK(so_membership(h, f.matrix));
    CHECK(respects_grading(h, e));
    CHECK(respects_grading(h, f));
    CHECK_FALSE(respects_grading(h, {e.matrix, 0}));
    const QMatrix b = exp_nilpotent(e.matrix);
    CHECK(is_isometry(h, b));
    const QMatrix r = reflection(h.pairing(), h.embed(lambda));
    CHECK(is_isometry(h, r));
    CHECK(r * r == QMatrix::identity(h.dim()));
  }
  CHECK(so_membership(h, grading_h(h).matrix));
  CHECK_FALSE(so_membership(h, QMatrix::identity(h.dim())));
  CHECK_FALSE(is_isometry(h, Rational(2) * QMatrix::identity(h.dim())));
  CHECK_THROWS_AS(exp_nilpotent(QMatrix::identity(2)), PreconditionError);
}

TEST_CASE("random generators are deterministic and well-formed") {
  const BBFLattice l = kummer_lattice(2);
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) {
    CHECK(a.next() == b.next());
    const QVector v = random_isotropic(a, l.form(), 20);
    CHECK(v == random_isotropic(b, l.form(), 20));
    CHECK(sgn(l.q(v, v)) == 0);
    CHECK_FALSE(v.is_zero());
  }
  for (int i = 0; i < 20; ++i) {
    const QMatrix m = random_isometry(a, l.form(), 5);
    CHECK(is_isometry(l, m));
    const QMatrix x = random_so_element(a, l.form(), 5);
    CHECK(so_membership(l.form(), x));
    const std::int64_t k = a.uniform_int(-3, 3);
    CHECK(k >= -3);
    CHECK(k <= 3);
    const Rational q = a.rational(20);
    CHECK(abs(q.get_num()) <= 20);
    CHECK(q.get_den() <= 20);
  }
  CHECK(derive_seed(1, "sl2") != derive_seed(1, "sym"));
  CHECK(find_isotropic(diagonal_lattice({1, 1}).form()) == std::nullopt);
  const auto iso = find_isotropic(diagonal_lattice({1, -4}).form());
  REQUIRE(iso);
  CHECK(sgn(diagonal_lattice({1, -4}).q(*iso, *iso)) == 0);
}

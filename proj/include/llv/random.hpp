#pragma once

// Seeded draws for the property suites. Only the raw 64-bit engine output is
// used, so sequences are identical across standard libraries.

#include "llv/hodge.hpp"
#include "llv/lattice.hpp"
#include "llv/sp.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace llv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi] by rejection; lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  /// num/den with num in [-bound, bound] and den in [1, bound].
  Rational rational(unsigned bound);
  Rational nonzero_rational(unsigned bound);

 private:
  std::mt19937_64 engine_;
};

/// Stream seed for a named sub-run, independent of the order sub-runs are executed in.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);

QVector random_vector(Rng& rng, std::size_t dim, unsigned bound);
/// Integer entries in [-bound, bound].
QVector random_integral_vector(Rng& rng, std::size_t dim, unsigned bound);
/// sign > 0 or < 0 forces the sign of the norm; 0 accepts either.
QVector random_non_isotropic(Rng& rng, const BilinearForm& form, unsigned bound, int sign = 0);

/// A nonzero isotropic vector in a basis direction or in the span of two, if any exists.
std::optional<QVector> find_isotropic(const BilinearForm& form);
/// q(w,w) x0 - 2 q(w,x0) w for random w and a fixed isotropic x0. PreconditionError if none is found.
QVector random_isotropic(Rng& rng, const BilinearForm& form, unsigned bound);

/// Product of `count` reflections in random integral non-isotropic vectors.
QMatrix random_isometry(Rng& rng, const BilinearForm& form, unsigned bound, unsigned count = 2);
/// x -> q(v,x) u - q(u,x) v summed over `terms` random pairs; lies in so(q).
QMatrix random_so_element(Rng& rng, const BilinearForm& form, unsigned bound, unsigned terms = 2);

struct DegreeReversingSample {
  QMatrix matrix;
  Rational scale;
  QMatrix base_block;
};

/// alpha -> s beta, beta -> s^-1 alpha with s a random nonzero rational, and a random base isometry.
DegreeReversingSample random_degree_reversing(Rng& rng, const MukaiExtension& h, unsigned bound);

SpElement random_integral_sp_element(Rng& rng, unsigned bound);
/// Word in [[1,t],[0,1]] and [[1,0],[level t,1]].
QMatrix random_gamma0(Rng& rng, const Integer& level, unsigned bound, unsigned length = 3);

/// Coordinate hyperbolic planes: pairs (i, j) with G_ii = G_jj = 0, G_ij = 1 and no other couplings.
std::vector<std::pair<std::size_t, std::size_t>> coordinate_hyperbolic_planes(const BBFLattice& l);

/// sigma from the norm-2 vectors e+f of two orthogonal hyperbolic planes and omega from a third.
struct TwistorWitness {
  PeriodPoint sigma;
  QVector omega;
};
std::optional<TwistorWitness> twistor_witness(const BBFLattice& l);

}  // namespace llv

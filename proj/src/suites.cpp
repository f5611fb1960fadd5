#include "llv/suites.hpp"

#include "llv/errors.hpp"
#include "llv/hodge.hpp"
#include "llv/random.hpp"
#include "llv/sp.hpp"
#include "llv/sym.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#ifndef LLV_VERSION
#define LLV_VERSION "0.0.0"
#endif

namespace llv {

namespace {

struct Outcome {
  bool passed = false;
  std::string witness;
};

class Recorder {
 public:
  Recorder(std::string suite, const Scenario& s, std::vector<CheckRecord>& out)
      : suite_(std::move(suite)), scenario_(s), out_(out), rng_(derive_seed(s.seed, suite_)) {}

  Rng& rng() { return rng_; }
  const Scenario& scenario() const { return scenario_; }
  unsigned samples(unsigned fallback) const { return scenario_.samples.value_or(fallback); }
  unsigned bound() const { return scenario_.bound; }

  /// Runs `check`; an llv::Error escaping it is a failed check, not an abort.
  void check(const std::string& name, const std::string& inputs, const std::string& anchor,
             const std::function<Outcome()>& body) {
    CheckRecord rec;
    rec.suite = suite_;
    rec.name = name;
    rec.inputs_digest = fnv1a_hex(suite_ + "|" + name + "|" + scenario_.lattice_source + "|" + inputs);
    rec.anchor = anchor;
    try {
      Outcome o = body();
      rec.passed = o.passed;
      rec.witness = std::move(o.witness);
    } catch (const Error& e) {
      rec.passed = false;
      rec.witness = std::string("error: ") + e.what();
    }
    out_.push_back(std::move(rec));
  }

 private:
  std::string suite_;
  const Scenario& scenario_;
  std::vector<CheckRecord>& out_;
  Rng rng_;
};

std::string indexed(const std::string& base, std::size_t i) { return base + "#" + std::to_string(i); }
std::string at_degree(const std::string& base, unsigned n) { return base + "/n=" + std::to_string(n); }

Integer binomial(unsigned long top, unsigned long bottom) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

// ---------------------------------------------------------------- sl2

void suite_sl2(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const GradedOperator hop = grading_h(h);
  for (unsigned i = 0; i < r.samples(25); ++i) {
    const QVector lambda = random_non_isotropic(r.rng(), h.base().form(), r.bound());
    const std::string inputs = to_string(lambda);
    r.check(indexed("triple", i), inputs, "sl2: [e,f]=h, [h,e]=2e, [h,f]=-2f", [&] {
      const QMatrix e = lefschetz_e(h, lambda).matrix;
      const QMatrix f = adjoint_f(h, lambda).matrix;
      const bool ef = commutator(e, f) == hop.matrix;
      const bool he = commutator(hop.matrix, e) == Rational(2) * e;
      const bool hf = commutator(hop.matrix, f) == Rational(-2) * f;
      return Outcome{ef && he && hf, "q(l,l)=" + to_string(h.base().q(lambda, lambda)) + (ef ? "" : " [e,f]!=h") +
                                         (he ? "" : " [h,e]!=2e") + (hf ? "" : " [h,f]!=-2f")};
    });
    r.check(indexed("so_graded", i), inputs, "e, f, h lie in so(H~) with degrees 2, -2, 0", [&] {
      const GradedOperator e = lefschetz_e(h, lambda);
      const GradedOperator f = adjoint_f(h, lambda);
      const bool so = so_membership(h, e.matrix) && so_membership(h, f.matrix) && so_membership(h, hop.matrix);
      const bool graded = respects_grading(h, e) && respects_grading(h, f) && respects_grading(h, hop);
      return Outcome{so && graded, std::string(so ? "so" : "not-so") + (graded ? " graded" : " ungraded")};
    });
  }
  if (const auto iso = find_isotropic(h.base().form())) {
    r.check("isotropic_rejected", to_string(*iso), "plumbing", [&] {
      try {
        adjoint_f(h, *iso);
      } catch (const PreconditionError&) {
        return Outcome{true, "precondition error raised"};
      }
      return Outcome{false, "adjoint built for an isotropic vector"};
    });
  }
}

// ---------------------------------------------------------------- sym

void suite_sym(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const unsigned d = static_cast<unsigned>(h.dim());
  for (unsigned n : r.scenario().degrees) {
    const SymBasis basis(h, n);
    const SymBasis lower(h, n - 2);
    const SparseMatrix delta = laplacian(basis);
    const Integer expected_rank = binomial(d + n - 3, n - 2);
    const Integer expected_kernel = binomial(d + n - 1, n) - expected_rank;
    const std::string inputs = "d=" + std::to_string(d) + ",n=" + std::to_string(n);

    r.check(at_degree("laplacian_surjective", n), inputs, "Delta: Sym^n -> Sym^(n-2) is onto", [&] {
      const std::size_t rk = rank(delta.to_dense());
      return Outcome{Integer(static_cast<unsigned long>(rk)) == expected_rank,
                     "rank " + std::to_string(rk) + ", expected " + to_string(expected_rank)};
    });
    r.check(at_degree("kernel_dimension", n), inputs, "dim S_[n] = C(d+n-1,n) - C(d+n-3,n-2)", [&] {
      std::size_t dim = 0;
      const int top = 2 * static_cast<int>(n);
      for (int w = -top; w <= top; w += 2) dim += s_n_kernel_weight(basis, delta, w).size();
      return Outcome{Integer(static_cast<unsigned long>(dim)) == expected_kernel,
                     "dim ker " + std::to_string(dim) + ", expected " + to_string(expected_kernel)};
    });

    const GradedOperator hop = grading_h(h);
    const SymOperator h_top = derivation_action(hop, basis);
    const SymOperator h_low = derivation_action(hop, lower);
    for (unsigned i = 0; i < r.samples(10); ++i) {
      const QVector lambda = random_non_isotropic(r.rng(), h.base().form(), r.bound());
      const QMatrix x = random_so_element(r.rng(), h.pairing(), r.bound(), 1);
      r.check(indexed(at_degree("module_map", n), i), to_string(lambda) + to_string(x),
              "Delta commutes with the so(H~) action", [&] {
                std::vector<std::pair<std::string, GradedOperator>> ops{
                    {"e", lefschetz_e(h, lambda)}, {"f", adjoint_f(h, lambda)}, {"so", {x, 0}}};
                std::string failed;
                for (const auto& [label, op] : ops) {
                  const SymOperator top = derivation_action(op, basis);
                  const SymOperator low = derivation_action(op, lower);
                  if (!(delta * top.matrix == low.matrix * delta)) failed += " " + label;
                }
                if (!(delta * h_top.matrix == h_low.matrix * delta)) failed += " h";
                return Outcome{failed.empty(), failed.empty() ? "e, f, h, so commute" : "fails for" + failed};
              });
    }
  }
}

// ---------------------------------------------------------------- hard Lefschetz

std::string describe_levels(const HardLefschetzReport& rep) {
  std::string out;
  for (const auto& l : rep.levels) {
    if (!out.empty()) out += ' ';
    out += "j" + std::to_string(l.j) + ":" + std::to_string(l.rank) + "/" + std::to_string(l.source_dim);
  }
  return out;
}

void suite_hard_lefschetz(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const bool has_isotropic = find_isotropic(h.base().form()).has_value();
  for (unsigned n : r.scenario().degrees) {
    const SymBasis basis(h, n);
    for (unsigned i = 0; i < r.samples(10); ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      const QVector f = random_non_isotropic(r.rng(), h.base().form(), r.bound(), sign);
      r.check(indexed(at_degree("full_rank", n), i), to_string(f), "E_f^(2j): S_[n](-2j) -> S_[n](2j) is bijective",
              [&] {
                const auto rep = hard_lefschetz_check(basis, f);
                return Outcome{rep.supported && rep.all_full_rank() && rep.dims_symmetric(),
                               std::string(sign > 0 ? "q>0 " : "q<0 ") + describe_levels(rep)};
              });
    }
    if (!has_isotropic) {
      r.check(at_degree("isotropic_drop", n), "", "plumbing",
              [] { return Outcome{false, "lattice has no isotropic vector to sample from"}; });
      continue;
    }
    for (unsigned i = 0; i < r.samples(5); ++i) {
      const QVector f = random_isotropic(r.rng(), h.base().form(), r.bound());
      r.check(indexed(at_degree("isotropic_drop", n), i), to_string(f), "q(f,f)=0 breaks hard Lefschetz", [&] {
        const auto rep = hard_lefschetz_check(basis, f);
        return Outcome{!rep.supported && !rep.all_full_rank(), "drop recorded: " + describe_levels(rep)};
      });
    }
  }
}

// ---------------------------------------------------------------- Fujiki

void suite_fujiki(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const bool has_isotropic = find_isotropic(h.base().form()).has_value();
  for (unsigned n : r.scenario().degrees) {
    const SymBasis basis(h, n);
    const Rational expected(double_factorial_odd(n));
    for (unsigned i = 0; i < r.samples(10); ++i) {
      const QVector f = random_non_isotropic(r.rng(), h.base().form(), r.bound());
      r.check(indexed(at_degree("model_constant", n), i), to_string(f),
              "E_f^(2n)(alpha^n/n!) = (2n-1)!! q(f,f)^n beta^n", [&] {
                const FujikiResult res = fujiki_coefficient(basis, f);
                return Outcome{res.model_constant && *res.model_constant == expected,
                               "model constant " + (res.model_constant ? to_string(*res.model_constant) : "unset")};
              });
    }
    if (!has_isotropic) continue;
    for (unsigned i = 0; i < r.samples(5); ++i) {
      const QVector f = random_isotropic(r.rng(), h.base().form(), r.bound());
      r.check(indexed(at_degree("isotropic_zero", n), i), to_string(f), "q(f,f)=0 gives E_f^(2n)(alpha^n) = 0", [&] {
        const FujikiResult res = fujiki_coefficient(basis, f);
        return Outcome{res.isotropic && sgn(res.beta_coefficient) == 0,
                       "beta^n coefficient " + to_string(res.beta_coefficient)};
      });
    }
  }
}

// ---------------------------------------------------------------- degree reversal

void suite_degree_reversal(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const std::size_t rank = h.base().rank();
  auto dressed_check = [&](const std::string& name, const ChernData& cd) {
    const DegreeReversingSample phi = random_degree_reversing(r.rng(), h, r.bound());
    r.check(name, "r=" + to_string(cd.r) + to_string(cd.lambda_x) + to_string(cd.lambda_y) + to_string(phi.matrix),
            "B_{-l_Y/r} Phi B_{-l_X/r} reverses degrees", [&] {
              const Rational inv_r = make_rational(1, cd.r);
              const QMatrix dressed =
                  bfield(h, inv_r * cd.lambda_y) * phi.matrix * bfield(h, inv_r * cd.lambda_x);
              const HodgeIsometry out = phi_kappa(h, h, {dressed, IsometryLevel::Mukai, 1}, cd);
              const bool reversing = check_degree_reversing(h, h, out.matrix);
              const bool recovered = out.matrix == phi.matrix;
              return Outcome{reversing && recovered,
                             std::string(reversing ? "degree-reversing" : "not degree-reversing") +
                                 (recovered ? ", undressed exactly" : ", differs from the undressed map")};
            });
  };
  for (std::size_t i = 0; i < r.scenario().chern_data.size(); ++i)
    dressed_check(indexed("scenario_dressed", i), r.scenario().chern_data[i]);
  const auto b = static_cast<std::int64_t>(r.bound());
  for (unsigned i = 0; i < r.samples(25); ++i) {
    ChernData cd{Integer(static_cast<long>(r.rng().uniform_int(1, b))), random_vector(r.rng(), rank, r.bound()),
                 random_vector(r.rng(), rank, r.bound())};
    dressed_check(indexed("dressed", i), cd);
  }
  for (unsigned i = 0; i < r.samples(25); ++i) {
    const Integer rr(static_cast<long>(r.rng().uniform_int(1, b)));
    const QVector lambda = random_vector(r.rng(), rank, r.bound());
    r.check(indexed("bfield_untwist", i), "r=" + to_string(rr) + to_string(lambda),
            "B_{-l/r}(r alpha + l + q(l,l)/(2r) beta) = r alpha", [&] {
              const Rational rq(rr);
              const QVector v = rq * h.alpha() + h.embed(lambda) + (h.base().q(lambda, lambda) / (2 * rq)) * h.beta();
              const QVector image = bfield(h, -(1 / rq) * lambda).apply(v);
              return Outcome{image == rq * h.alpha(), "image " + to_string(image)};
            });
  }
  r.check("bfield_not_reversing", "", "plumbing", [&] {
    QVector lambda(rank);
    lambda[0] = 1;
    const bool b_rev = check_degree_reversing(h, h, bfield(h, lambda));
    const bool id_rev = check_degree_reversing(h, h, QMatrix::identity(h.dim()));
    const bool tau_rev = check_degree_reversing(h, h, swap_isometry(h));
    return Outcome{!b_rev && !id_rev && tau_rev, "B_l, identity rejected; swap accepted"};
  });
}

// ---------------------------------------------------------------- LSC certificate

void suite_lsc(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const auto& form = h.base().form();
  const unsigned n_phi = r.samples(10);
  const unsigned n_f = r.samples(10);
  for (unsigned i = 0; i < n_phi; ++i) {
    const DegreeReversingSample phi = random_degree_reversing(r.rng(), h, r.bound());
    for (unsigned k = 0; k < n_f; ++k) {
      const QVector f = random_non_isotropic(r.rng(), form, r.bound());
      r.check("certificate#" + std::to_string(i) + "." + std::to_string(k), to_string(phi.matrix) + to_string(f),
              "phi^-1 e_{phi0 f} phi = c f_f, c = q(f,f)/(2s)", [&] {
                const LscCertificate cert = lsc_certificate(h, phi.matrix, f);
                const Rational predicted = form.norm(f) / (2 * phi.scale);
                return Outcome{sgn(cert.scalar) != 0 && cert.scalar == predicted, "c = " + to_string(cert.scalar)};
              });
    }
  }
  const QMatrix tau = swap_isometry(h);
  const QMatrix tau_neg = degree_reversing_isometry(h, 1, -QMatrix::identity(h.base().rank()));
  for (unsigned k = 0; k < n_f; ++k) {
    const QVector f = random_non_isotropic(r.rng(), form, r.bound());
    r.check(indexed("swap", k), to_string(f), "phi = swap gives c = q(f,f)/2", [&] {
      const LscCertificate cert = lsc_certificate(h, tau, f);
      return Outcome{cert.scalar == form.norm(f) / 2, "c = " + to_string(cert.scalar)};
    });
    r.check(indexed("swap_negated_base", k), to_string(f), "phi = swap . (-1 on H^2) stays proportional", [&] {
      const LscCertificate cert = lsc_certificate(h, tau_neg, f);
      return Outcome{sgn(cert.scalar) != 0, "c = " + to_string(cert.scalar)};
    });
  }
  for (std::size_t i = 0; i < r.scenario().isometries.size(); ++i) {
    const QMatrix& phi = r.scenario().isometries[i];
    if (phi.rows() != h.dim()) continue;
    const QVector f = random_non_isotropic(r.rng(), form, r.bound());
    r.check(indexed("scenario_isometry", i), to_string(phi) + to_string(f), "phi^-1 e_{phi0 f} phi = c f_f", [&] {
      if (!is_isometry(h, phi)) return Outcome{false, "not an isometry of H~"};
      const LscCertificate cert = lsc_certificate(h, phi, f);
      return Outcome{sgn(cert.scalar) != 0, "c = " + to_string(cert.scalar)};
    });
  }
  r.check("identity_rejected", "", "plumbing", [&] {
    try {
      lsc_certificate(h, QMatrix::identity(h.dim()), random_non_isotropic(r.rng(), form, r.bound()));
    } catch (const PreconditionError&) {
      return Outcome{true, "precondition error raised"};
    }
    return Outcome{false, "identity accepted as degree-reversing"};
  });
}

// ---------------------------------------------------------------- so conjugation

void suite_so_conjugation(Recorder& r) {
  const MukaiExtension h = mukai_extend(r.scenario().lattice);
  const QMatrix hop = grading_h(h).matrix;
  struct Sample {
    std::string label;
    QMatrix matrix;
    bool reversing;
  };
  std::vector<Sample> phis;
  const unsigned count = r.samples(10);
  for (unsigned i = 0; i < count; ++i) {
    if (i % 2 == 0)
      phis.push_back({indexed("reflections", i), random_isometry(r.rng(), h.pairing(), r.bound(), 3), false});
    else
      phis.push_back({indexed("reversing", i), random_degree_reversing(r.rng(), h, r.bound()).matrix, true});
  }
  for (std::size_t i = 0; i < r.scenario().isometries.size(); ++i) {
    const QMatrix& m = r.scenario().isometries[i];
    if (m.rows() == h.dim()) phis.push_back({indexed("scenario", i), m, check_degree_reversing(h, h, m)});
  }
  for (const auto& phi : phis) {
    const auto inv = inverse(phi.matrix);
    for (unsigned k = 0; k < r.samples(10); ++k) {
      const QMatrix x = random_so_element(r.rng(), h.pairing(), r.bound());
      r.check(phi.label + "." + std::to_string(k), to_string(phi.matrix) + to_string(x),
              "phi so(H~) phi^-1 = so(H~)", [&] {
                if (!is_isometry(h, phi.matrix) || !inv) return Outcome{false, "phi is not an invertible isometry"};
                const bool ok = so_membership(h, phi.matrix * x * *inv);
                return Outcome{ok, ok ? "conjugate in so" : "conjugate leaves so"};
              });
    }
    if (phi.reversing) {
      r.check(phi.label + ".grading", to_string(phi.matrix), "phi h phi^-1 = -h for degree-reversing phi", [&] {
        const bool ok = inv && phi.matrix * hop * *inv == -hop;
        return Outcome{ok, ok ? "h negated" : "h not negated"};
      });
    }
  }
}

// ---------------------------------------------------------------- Sp group

std::string describe(const SpElement& f) {
  return "(" + to_string(f.a1) + "," + to_string(f.a2) + "," + to_string(f.a3) + "," + to_string(f.a4) + ")";
}

void suite_sp_group(Recorder& r) {
  std::vector<SpParams> params = r.scenario().sp_params;
  if (params.empty()) params = {{2, 2}, {2, 1}, {3, 3}};
  const unsigned small = std::min(r.bound(), 5u);
  for (const SpParams& p : params) {
    const std::string tag = "e=" + to_string(p.e) + ",n+1=" + std::to_string(p.n + 1);
    const Integer level = p.E();

    r.check(tag + "/ext_gcd", tag, "m1 e - m2 (n+1) = 1", [&] {
      const ExtGcd g = ext_gcd(p.e, p.n + 1);
      const bool ok = g.g == 1 && g.m1 * p.e - g.m2 * (p.n + 1) == 1;
      return Outcome{ok, "m1=" + to_string(g.m1) + " m2=" + to_string(g.m2)};
    });

    for (unsigned i = 0; i < r.samples(100); ++i) {
      const SpElement f = (i % 2 == 0) ? random_integral_sp_element(r.rng(), small)
                                       : gamma0_embed(p, random_gamma0(r.rng(), level, small));
      r.check(indexed(tag + "/det_tilde", i), describe(f), "det f = 1 <=> tilde(f) f = id", [&] {
        const bool det_one = determinant(realize(p, f)) == 1;
        const bool inverse_left = compose(p, tilde(f), f) == SpElement::identity();
        const bool inverse_right = compose(p, f, tilde(f)) == SpElement::identity();
        const bool ok = det_one == inverse_left && det_one == inverse_right && det_one == is_symplectic(p, f);
        return Outcome{ok, det_one ? "det 1, tilde inverts" : "det != 1, tilde does not invert"};
      });
    }

    for (unsigned i = 0; i < r.samples(50); ++i) {
      const QMatrix m = random_gamma0(r.rng(), level, small);
      const QMatrix m2 = random_gamma0(r.rng(), level, small);
      r.check(indexed(tag + "/gamma0", i), to_string(m) + to_string(m2),
              "Gamma0(E) -> Sp(W)^S is an injective homomorphism", [&] {
                const SpElement f = gamma0_embed(p, m);
                const SpElement g = gamma0_embed(p, m2);
                const bool round_trip = realize(p, f) == m && gamma0_embed(p, realize(p, f)) == f;
                const bool hom = gamma0_embed(p, m * m2) == compose(p, f, g);
                const bool closed = is_symplectic(p, compose(p, f, g));
                const bool anti = tilde(compose(p, f, g)) == compose(p, tilde(g), tilde(f));
                std::string w;
                if (!round_trip) w += " round-trip";
                if (!hom) w += " homomorphism";
                if (!closed) w += " closure";
                if (!anti) w += " tilde-anti";
                return Outcome{w.empty(), w.empty() ? "ok" : "fails:" + w};
              });
    }

    const ExtGcd g = ext_gcd(p.e, p.n + 1);
    if (g.g != 1) {
      r.check(tag + "/g_search", tag, "plumbing",
              [&] { return Outcome{true, "skipped: gcd(e, n+1) = " + to_string(g.g)}; });
      continue;
    }
    const GSearchReport search = g_candidate_search(p);
    r.check(tag + "/g_search", tag, "symplectic g in Sp(W, W^)^S", [&] {
      bool all_symplectic = true;
      for (const auto& c : search.candidates) all_symplectic = all_symplectic && is_symplectic(p, c.g);
      std::string w = std::to_string(search.candidates.size()) + " of " + std::to_string(search.tried) +
                      " assignments symplectic; integrality assumed";
      if (!search.candidates.empty()) {
        const auto& c = search.candidates.front();
        w += "; first s2=" + to_string(c.s2) + " s3=" + to_string(c.s3) + " s4=" + to_string(c.s4);
      }
      return Outcome{!search.candidates.empty() && all_symplectic, w};
    });
    const std::size_t shown = std::min<std::size_t>(search.candidates.size(), 4);
    for (std::size_t a = 0; a < shown; ++a)
      for (std::size_t b = 0; b < shown; ++b) {
        const auto& ga = search.candidates[a].g;
        const auto& gb = search.candidates[b].g;
        r.check(tag + "/torsor#" + std::to_string(a) + "." + std::to_string(b), tag,
                "tilde(g') g has determinant 1", [&] {
                  const SpElement t = transition(p, ga, gb);
                  const bool symplectic = is_symplectic(p, t);
                  return Outcome{symplectic, describe(t) + (t.is_integral() ? " integral" : " non-integral (assumed)")};
                });
      }
    if (!search.candidates.empty()) {
      const QMatrix m = random_gamma0(r.rng(), level, small);
      r.check(tag + "/right_action", to_string(m), "Sp(W)^S acts on the right of Sp(W, W^)^S", [&] {
        const auto& gc = search.candidates.front().g;
        const SpTorsorElement moved = act(p, gc, gamma0_embed(p, m));
        const bool ok = is_symplectic(p, moved) && realize_torsor(p, moved) == realize_torsor(p, gc) * m;
        return Outcome{ok, ok ? "action preserves symplecticity" : "action broken"};
      });
    }
  }
}

// ---------------------------------------------------------------- twistor

void suite_twistor(Recorder& r) {
  const BBFLattice& l = r.scenario().lattice;
  const std::size_t rank = l.rank();
  const auto witness = twistor_witness(l);

  auto expect_precondition = [](const std::function<void()>& f, const std::string& what) {
    try {
      f();
    } catch (const PreconditionError& e) {
      return Outcome{true, std::string("rejected: ") + e.what()};
    }
    return Outcome{false, what + " accepted"};
  };

  auto diagonal_check = [&](const std::string& name, const QMatrix& psi, const PeriodPoint& sigma,
                            const QVector& omega) {
    r.check(name, to_string(psi) + to_string(sigma.x) + to_string(sigma.y) + to_string(omega),
            "isometries preserve the twistor Gram", [&] {
              if (!is_isometry(l, psi)) return Outcome{false, "not an isometry"};
              const DiagonalTwistor dt = diagonal_twistor(l, psi, sigma, omega);
              const bool same = dt.image.gram == dt.source.gram;
              return Outcome{same, "Gram " + to_string(dt.source.gram)};
            });
  };

  if (witness) {
    const PeriodPoint& sigma = witness->sigma;
    const QVector& omega = witness->omega;
    std::optional<QVector> negative;
    for (std::size_t i = 0; i < rank && !negative; ++i)
      if (sgn(l.gram()(i, i)) < 0) negative = QVector::unit(rank, i);
    if (!negative) {
      const auto planes = coordinate_hyperbolic_planes(l);
      QVector v(rank);
      v[planes[1].first] = 1;
      v[planes[1].second] = -1;
      negative = v;
    }
    const std::string base_inputs = to_string(sigma.x) + to_string(sigma.y) + to_string(omega);

    r.check("period_witness", base_inputs, "q(s,s)=0, q(s,conj s)>0",
            [&] { return Outcome{is_period_point(l, sigma), "x, y from orthogonal U factors"}; });
    r.check("period_reject_equal", base_inputs, "q(s,s)=0, q(s,conj s)>0",
            [&] { return Outcome{!is_period_point(l, sigma.x, sigma.x), "x = y rejected"}; });
    r.check("period_reject_negative", base_inputs + to_string(*negative), "q(s,s)=0, q(s,conj s)>0",
            [&] { return Outcome{!is_period_point(l, sigma.x, *negative), "negative-norm y rejected"}; });
    r.check("twistor_witness", base_inputs, "W = <Re s, Im s, w> positive definite", [&] {
      const TwistorSpace w = twistor_space(l, sigma, omega);
      const bool ok = w.gram == QMatrix::diagonal({2, 2, 2});
      return Outcome{ok, "Gram " + to_string(w.gram)};
    });
    r.check("twistor_reject_negative", base_inputs + to_string(*negative), "W = <Re s, Im s, w> positive definite",
            [&] { return expect_precondition([&] { twistor_space(l, sigma, *negative); }, "negative omega"); });
    r.check("twistor_reject_nonorthogonal", base_inputs, "W = <Re s, Im s, w> positive definite",
            [&] { return expect_precondition([&] { twistor_space(l, sigma, sigma.x); }, "omega = x"); });

    const QMatrix id = QMatrix::identity(rank);
    r.check("hodge_scalar_identity", base_inputs, "psi(s) = (a + i b) s'", [&] {
      const auto s = hodge_isometry_scalar(l, id, sigma, sigma);
      return Outcome{s && s->a == 1 && sgn(s->b) == 0, s ? "(a,b)=(" + to_string(s->a) + "," + to_string(s->b) + ")" : "none"};
    });
    r.check("hodge_scalar_negation", base_inputs, "psi(s) = (a + i b) s'", [&] {
      const auto s = hodge_isometry_scalar(l, -id, sigma, sigma);
      return Outcome{s && s->a == -1 && sgn(s->b) == 0, s ? "(a,b)=(" + to_string(s->a) + "," + to_string(s->b) + ")" : "none"};
    });
    r.check("hodge_scalar_factor_swap", base_inputs, "psi(s) = (a + i b) s'", [&] {
      const auto planes = coordinate_hyperbolic_planes(l);
      QMatrix swap = QMatrix::identity(rank);
      for (auto [a, b] : {std::pair{planes[0].first, planes[2].first}, std::pair{planes[0].second, planes[2].second}}) {
        swap(a, a) = 0;
        swap(b, b) = 0;
        swap(a, b) = 1;
        swap(b, a) = 1;
      }
      return Outcome{is_isometry(l, swap) && !is_hodge_isometry(l, swap, sigma, sigma), "swap of U factors rejected"};
    });

    diagonal_check("diagonal_identity", id, sigma, omega);
    diagonal_check("diagonal_negation", -id, sigma, omega);
    for (unsigned i = 0; i < r.samples(10); ++i)
      diagonal_check(indexed("diagonal", i), random_isometry(r.rng(), l.form(), std::min(r.bound(), 3u), 3), sigma,
                     omega);

    r.check("kahler_identity", base_inputs, "psi preserves the positive cone",
            [&] { return Outcome{kahler_cone_compatible(l, id, omega, omega), "same component"}; });
    r.check("kahler_negation", base_inputs, "psi preserves the positive cone",
            [&] { return Outcome{!kahler_cone_compatible(l, -id, omega, omega), "opposite component detected"}; });
    r.check("picard_rank", base_inputs, "rational period points are never generic", [&] {
      const std::size_t rho = picard_rank(l, sigma);
      return Outcome{rho == rank - 2 && !is_generic_path(l, {sigma}), "Picard rank " + std::to_string(rho)};
    });
  } else {
    r.check("period_witness", "", "plumbing",
            [] { return Outcome{false, "lattice has fewer than three coordinate hyperbolic planes"}; });
  }

  for (std::size_t i = 0; i < r.scenario().period_points.size(); ++i) {
    const auto& p = r.scenario().period_points[i];
    r.check(indexed("scenario_period_point", i), to_string(p.sigma.x) + to_string(p.sigma.y),
            "q(s,s)=0, q(s,conj s)>0", [&] {
              const bool ok = is_period_point(l, p.sigma);
              return Outcome{ok, "q(x,x)=" + to_string(l.q(p.sigma.x, p.sigma.x)) + " q(y,y)=" +
                                     to_string(l.q(p.sigma.y, p.sigma.y)) + " q(x,y)=" +
                                     to_string(l.q(p.sigma.x, p.sigma.y))};
            });
    if (!p.omega) continue;
    diagonal_check(indexed("scenario_diagonal_identity", i), QMatrix::identity(rank), p.sigma, *p.omega);
    for (std::size_t k = 0; k < r.scenario().isometries.size(); ++k) {
      const QMatrix& psi = r.scenario().isometries[k];
      if (psi.rows() == rank)
        diagonal_check("scenario_diagonal#" + std::to_string(i) + "." + std::to_string(k), psi, p.sigma, *p.omega);
    }
  }
}

}  // namespace

Integer double_factorial_odd(unsigned n) {
  Integer out = 1;
  for (unsigned k = 1; k <= n; ++k) out *= 2 * k - 1;
  return out;
}

void run_suite(std::string_view name, const Scenario& s, std::vector<CheckRecord>& out) {
  static const std::vector<std::pair<std::string_view, void (*)(Recorder&)>> table{
      {"sl2", suite_sl2},
      {"sym", suite_sym},
      {"hard_lefschetz", suite_hard_lefschetz},
      {"fujiki", suite_fujiki},
      {"degree_reversal", suite_degree_reversal},
      {"lsc_certificate", suite_lsc},
      {"so_conjugation", suite_so_conjugation},
      {"sp_group", suite_sp_group},
      {"twistor", suite_twistor},
  };
  for (const auto& [key, fn] : table) {
    if (key == name) {
      Recorder rec(std::string(name), s, out);
      fn(rec);
      return;
    }
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

Report run_suites(const Scenario& s) {
  validate(s);
  Report report;
  report.version = LLV_VERSION;
  report.seed = s.seed;
  for (const auto& name : known_suites()) {
    const bool selected = s.suites.empty() || std::find(s.suites.begin(), s.suites.end(), name) != s.suites.end();
    if (selected) run_suite(name, s, report.records);
  }
  return report;
}

}  // namespace llv

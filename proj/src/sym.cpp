#include "llv/sym.hpp"

#include "llv/errors.hpp"
#include "llv/kernels.hpp"

#include <algorithm>
#include <string>

namespace llv {

Integer sym_dim(unsigned d, unsigned n) {
  if (d == 0) throw PreconditionError("sym_dim requires d >= 1");
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), d + n - 1, n);
  return out;
}

// ---------------------------------------------------------------- SymBasis

namespace {

void enumerate(std::size_t pos, unsigned remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    current[pos] = k;
    enumerate(pos + 1, remaining - k, current, out);
  }
  current[pos] = 0;
}

}  // namespace

SymBasis::SymBasis(MukaiExtension h, unsigned n) : h_(std::move(h)), n_(n) {
  MultiIndex current(h_.dim(), 0);
  enumerate(0, n_, current, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> SymBasis::index_of(const MultiIndex& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SymBasis::weight(std::size_t i) const {
  const MultiIndex& m = monomials_[i];
  return 2 * (static_cast<int>(m.back()) - static_cast<int>(m.front()));
}

std::vector<std::size_t> SymBasis::indices_of_weight(int w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (weight(i) == w) out.push_back(i);
  return out;
}

bool SymBasis::is_degree_zero_part(std::size_t i) const {
  return monomials_[i].front() == 0 && monomials_[i].back() == 0;
}

// ---------------------------------------------------------------- SymVector

SymVector::SymVector(SparseVector coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

Rational SymVector::coefficient(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational SymVector::coefficient(const SymBasis& basis, const MultiIndex& m) const {
  const auto i = basis.index_of(m);
  if (!i) throw DimensionError("monomial does not belong to the basis");
  return coefficient(*i);
}

SymVector operator*(const Rational& s, const SymVector& v) {
  SparseVector out;
  for (const auto& [i, c] : v.coeffs()) out[i] = s * c;
  return SymVector(std::move(out));
}

SymVector operator-(const SymVector& a, const SymVector& b) {
  SparseVector out = a.coeffs();
  for (const auto& [i, c] : b.coeffs()) out[i] -= c;
  return SymVector(std::move(out));
}

SymVector apply(const SymOperator& op, const SymVector& v) { return SymVector(op.matrix.apply(v.coeffs())); }

// ---------------------------------------------------------------- derivation and Laplacian

SparseVector derivation_column(const QMatrix& op, const SymBasis& basis, std::size_t j) {
  const MultiIndex& m = basis.monomial(j);
  const std::size_t d = basis.vars();
  SparseVector col;
  MultiIndex target = m;
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i] == 0) continue;
    --target[i];
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& entry = op(k, i);  // x_i -> sum_k op(k, i) x_k
      if (sgn(entry) == 0) continue;
      ++target[k];
      col[*basis.index_of(target)] += m[i] * entry;
      --target[k];
    }
    ++target[i];
  }
  std::erase_if(col, [](const auto& kv) { return sgn(kv.second) == 0; });
  return col;
}

SymOperator derivation_action(const GradedOperator& op, const SymBasis& basis) {
  if (op.matrix.rows() != basis.vars() || op.matrix.cols() != basis.vars())
    throw DimensionError("derivation_action: operator does not act on the basis space");
  SparseMatrix m = kernels::parallel::build_columns(
      basis.size(), basis.size(), [&](std::size_t j) { return derivation_column(op.matrix, basis, j); });
  return {std::move(m), op.degree};
}

SparseVector laplacian_column(const SymBasis& basis, std::size_t j) {
  // Rows index SymBasis(space, n - 2) via the closed-form lex rank below.
  const MultiIndex& m = basis.monomial(j);
  const QMatrix& g = basis.space().pairing().gram();
  const std::size_t d = basis.vars();
  SparseVector col;
  auto position = [&](const MultiIndex& t) {
    // index of t among degree-(n-2) monomials in descending lex order
    std::size_t idx = 0;
    unsigned remaining = basis.degree() - 2;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      // monomials with a larger exponent at p come first
      for (unsigned k = remaining; k > t[p]; --k) {
        Integer cnt = sym_dim(static_cast<unsigned>(d - p - 1), remaining - k);
        idx += cnt.get_ui();
      }
      remaining -= t[p];
    }
    return idx;
  };
  MultiIndex target = m;
  for (std::size_t k = 0; k < d; ++k) {
    if (m[k] == 0) continue;
    if (m[k] >= 2 && sgn(g(k, k)) != 0) {
      target[k] -= 2;
      col[position(target)] += g(k, k) * make_rational(m[k] * (m[k] - 1), 2);
      target[k] += 2;
    }
    for (std::size_t l = k + 1; l < d; ++l) {
      if (m[l] == 0 || sgn(g(k, l)) == 0) continue;
      --target[k];
      --target[l];
      col[position(target)] += g(k, l) * (m[k] * m[l]);
      ++target[k];
      ++target[l];
    }
  }
  std::erase_if(col, [](const auto& kv) { return sgn(kv.second) == 0; });
  return col;
}

SparseMatrix laplacian(const SymBasis& basis) {
  if (basis.degree() < 2) throw PreconditionError("laplacian requires n >= 2");
  const std::size_t rows = sym_dim(static_cast<unsigned>(basis.vars()), basis.degree() - 2).get_ui();
  return kernels::parallel::build_columns(rows, basis.size(),
                                          [&](std::size_t j) { return laplacian_column(basis, j); });
}

// ---------------------------------------------------------------- S_[n]

std::vector<SymVector> s_n_kernel_weight(const SymBasis& basis, const SparseMatrix& delta, int w) {
  const auto cols = basis.indices_of_weight(w);
  if (cols.empty()) return {};
  // Delta preserves the weight, so only the rows hit by these columns matter.
  std::vector<std::size_t> rows;
  for (auto c : cols)
    for (const auto& e : delta.column(c)) rows.push_back(e.row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<SymVector> out;
  if (rows.empty()) {
    for (auto c : cols) out.emplace_back(SparseVector{{c, Rational(1)}});
    return out;
  }
  for (const auto& k : kernel_basis(delta.submatrix(rows, cols))) {
    SparseVector v;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (sgn(k[t]) != 0) v[cols[t]] = k[t];
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<SymVector> s_n_kernel(const SymBasis& basis) {
  const SparseMatrix delta = laplacian(basis);
  const int top = 2 * static_cast<int>(basis.degree());
  std::vector<SymVector> out;
  for (int w = -top; w <= top; w += 2) {
    auto part = s_n_kernel_weight(basis, delta, w);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

SymVector psi_unit(const SymBasis& basis) {
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), basis.degree());
  return SymVector(SparseVector{{basis.alpha_power_index(), make_rational(1, fact)}});
}

// ---------------------------------------------------------------- Hard Lefschetz / Fujiki

bool HardLefschetzReport::all_full_rank() const {
  return std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.full_rank(); });
}

bool HardLefschetzReport::dims_symmetric() const {
  return std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.source_dim == l.target_dim; });
}

HardLefschetzReport hard_lefschetz_check(const SymBasis& basis, const QVector& f) {
  const MukaiExtension& h = basis.space();
  const QVector fe = h.embed(f);
  HardLefschetzReport report;
  report.supported = sgn(h.q(fe, fe)) != 0;
  if (basis.degree() < 2) throw PreconditionError("hard_lefschetz_check requires n >= 2");
  const SymOperator e = derivation_action(lefschetz_e(h, fe), basis);
  const SparseMatrix delta = laplacian(basis);
  for (unsigned j = 1; j <= basis.degree(); ++j) {
    const int w = 2 * static_cast<int>(j);
    const auto source = s_n_kernel_weight(basis, delta, -w);
    const auto target = s_n_kernel_weight(basis, delta, w);
    const auto target_idx = basis.indices_of_weight(w);
    std::vector<QVector> images;
    for (const auto& v : source) {
      SymVector img = v;
      for (int k = 0; k < w; ++k) img = apply(e, img);
      QVector dense(target_idx.size());
      for (std::size_t t = 0; t < target_idx.size(); ++t) dense[t] = img.coefficient(target_idx[t]);
      images.push_back(std::move(dense));
    }
    LefschetzLevel level;
    level.j = j;
    level.source_dim = source.size();
    level.target_dim = target.size();
    level.rank = images.empty() ? 0 : rank(QMatrix::from_columns(images));
    report.levels.push_back(level);
  }
  return report;
}

FujikiResult fujiki_coefficient(const SymBasis& basis, const QVector& f) {
  const MukaiExtension& h = basis.space();
  const QVector fe = h.embed(f);
  const SymOperator e = derivation_action(lefschetz_e(h, fe), basis);
  SymVector v = psi_unit(basis);
  for (unsigned k = 0; k < 2 * basis.degree(); ++k) v = apply(e, v);
  FujikiResult out;
  out.beta_coefficient = v.coefficient(basis.beta_power_index());
  const Rational norm = h.q(fe, fe);
  out.isotropic = sgn(norm) == 0;
  if (!out.isotropic) {
    Rational power = 1;
    for (unsigned k = 0; k < basis.degree(); ++k) power *= norm;
    out.model_constant = out.beta_coefficient / power;
  }
  return out;
}

// ---------------------------------------------------------------- BBF class in Sym^2

SymVector bbf_dual_class(const SymBasis& basis) {
  if (basis.degree() != 2) throw PreconditionError("bbf_dual_class requires n = 2");
  const auto inv = inverse(basis.space().base().gram());
  if (!inv) throw PreconditionError("bbf_dual_class: base form is degenerate");
  const std::size_t r = inv->rows();
  SparseVector coeffs;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      const Rational& c = (*inv)(k, l);
      if (sgn(c) == 0) continue;
      MultiIndex m(basis.vars(), 0);
      ++m[k + 1];
      ++m[l + 1];
      coeffs[*basis.index_of(m)] = k == l ? c : Rational(2 * c);
    }
  }
  return SymVector(std::move(coeffs));
}

std::optional<Rational> is_multiple_of_bbf(const SymBasis& basis, const SymVector& t) {
  for (const auto& [i, c] : t.coeffs()) {
    if (i >= basis.size() || !basis.is_degree_zero_part(i))
      throw PreconditionError("is_multiple_of_bbf: input has components outside Sym^2 of the base");
  }
  if (t.is_zero()) return Rational(0);
  const SymVector dual = bbf_dual_class(basis);
  const auto& [i0, d0] = *dual.coeffs().begin();
  const Rational scale = t.coefficient(i0) / d0;
  if (scale * dual == t) return scale;
  return std::nullopt;
}

}  // namespace llv

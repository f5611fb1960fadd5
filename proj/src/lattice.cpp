#include "llv/lattice.hpp"

#include "llv/errors.hpp"

#include <cctype>
#include <string>

namespace llv {

// ---------------------------------------------------------------- BBFLattice

BBFLattice::BBFLattice(BilinearForm form, std::vector<std::string> labels)
    : form_(std::move(form)), labels_(std::move(labels)) {
  if (form_.size() == 0) throw DimensionError("lattice of rank 0");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < form_.size(); ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != form_.size()) throw DimensionError("lattice labels do not match rank");
  signature_ = llv::signature(form_);
  if (signature_.zero != 0) throw PreconditionError("lattice form is degenerate");
}

BBFLattice hyperbolic_plane() {
  return BBFLattice(BilinearForm(QMatrix::from_rows({{0, 1}, {1, 0}})), {"e", "f"});
}

BBFLattice diagonal_lattice(const std::vector<Rational>& diag) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < diag.size(); ++i) labels.push_back("d" + std::to_string(i));
  return BBFLattice(BilinearForm(QMatrix::diagonal(diag)), labels);
}

BBFLattice direct_sum(const std::vector<BBFLattice>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.rank();
  QMatrix g(total, total);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(offset + i, offset + j) = p.gram()(i, j);
    for (const auto& l : p.labels()) labels.push_back(parts.size() > 1 ? std::to_string(k) + "." + l : l);
    offset += p.rank();
  }
  return BBFLattice(BilinearForm(std::move(g)), std::move(labels));
}

BBFLattice kummer_lattice(int n) {
  if (n < 2) throw PreconditionError("kummer_lattice requires n >= 2");
  QMatrix g(7, 7);
  for (std::size_t k = 0; k < 3; ++k) {
    g(2 * k, 2 * k + 1) = 1;
    g(2 * k + 1, 2 * k) = 1;
  }
  g(6, 6) = -2 * (n + 1);
  return BBFLattice(BilinearForm(std::move(g)), {"u1.e", "u1.f", "u2.e", "u2.f", "u3.e", "u3.f", "delta"});
}

// ---------------------------------------------------------------- expression parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  BBFLattice parse() {
    BBFLattice l = lattice();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("lattice expression \"" + std::string(text_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view number_token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  BBFLattice lattice() {
    const std::string name = identifier();
    if (name == "U") {
      if (accept('(')) expect(')');
      return hyperbolic_plane();
    }
    if (name == "diag") {
      expect('(');
      std::vector<Rational> entries;
      do {
        entries.push_back(parse_rational(number_token()));
      } while (accept(','));
      expect(')');
      return diagonal_lattice(entries);
    }
    if (name == "kummer") {
      expect('(');
      const Rational n = parse_rational(number_token());
      expect(')');
      if (!is_integer(n) || !n.get_num().fits_sint_p()) fail("kummer(n) needs an integer n");
      return kummer_lattice(static_cast<int>(n.get_num().get_si()));
    }
    if (name == "direct_sum") {
      expect('(');
      std::vector<BBFLattice> parts;
      do {
        parts.push_back(lattice());
      } while (accept(','));
      expect(')');
      return direct_sum(parts);
    }
    fail("unknown constructor \"" + name + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BBFLattice lattice_from_expression(std::string_view expr) { return ExprParser(expr).parse(); }

// ---------------------------------------------------------------- MukaiExtension

MukaiExtension::MukaiExtension(BBFLattice base)
    : base_(std::move(base)), pairing_([this] {
        const std::size_t r = base_.rank();
        QMatrix g(r + 2, r + 2);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) g(i + 1, j + 1) = base_.gram()(i, j);
        g(0, r + 1) = -1;
        g(r + 1, 0) = -1;
        return BilinearForm(std::move(g));
      }()) {}

int MukaiExtension::degree_of(std::size_t i) const {
  if (i == alpha_index()) return -2;
  if (i == beta_index()) return 2;
  return 0;
}

QVector MukaiExtension::embed(const QVector& lambda) const {
  if (lambda.dim() == base_.rank()) {
    QVector v(dim());
    for (std::size_t i = 0; i < lambda.dim(); ++i) v[i + 1] = lambda[i];
    return v;
  }
  if (lambda.dim() == dim()) {
    if (!in_base(lambda)) throw PreconditionError("vector has alpha/beta components; expected a degree-0 class");
    return lambda;
  }
  throw DimensionError("vector of dimension " + std::to_string(lambda.dim()) + " is neither base (" +
                       std::to_string(base_.rank()) + ") nor extension (" + std::to_string(dim()) + ") sized");
}

QVector MukaiExtension::base_part(const QVector& x) const {
  if (x.dim() != dim()) throw DimensionError("base_part: vector is not in the extension");
  QVector v(base_.rank());
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] = x[i + 1];
  return v;
}

bool MukaiExtension::in_base(const QVector& x) const {
  return x.dim() == dim() && sgn(x[alpha_index()]) == 0 && sgn(x[beta_index()]) == 0;
}

MukaiExtension mukai_extend(const BBFLattice& base) { return MukaiExtension(base); }

// ---------------------------------------------------------------- LLV operators

GradedOperator lefschetz_e(const MukaiExtension& h, const QVector& lambda) {
  const QVector l = h.embed(lambda);
  const std::size_t d = h.dim();
  QMatrix m(d, d);
  // alpha -> lambda
  for (std::size_t i = 0; i < d; ++i) m(i, h.alpha_index()) = l[i];
  // mu -> q(lambda, mu) beta for base basis vectors mu
  for (std::size_t j = 1; j + 1 < d; ++j) m(h.beta_index(), j) = h.q(l, QVector::unit(d, j));
  return {std::move(m), 2};
}

GradedOperator grading_h(const MukaiExtension& h) {
  QMatrix m(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) m(i, i) = h.degree_of(i);
  return {std::move(m), 0};
}

GradedOperator adjoint_f(const MukaiExtension& h, const QVector& lambda) {
  const QVector l = h.embed(lambda);
  const Rational norm = h.q(l, l);
  if (sgn(norm) == 0) throw PreconditionError("adjoint_f: lambda is isotropic, no sl2 normalisation exists");
  const Rational scale = 2 / norm;
  const std::size_t d = h.dim();
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, h.beta_index()) = scale * l[i];
  for (std::size_t j = 1; j + 1 < d; ++j) m(h.alpha_index(), j) = scale * h.q(l, QVector::unit(d, j));
  return {std::move(m), -2};
}

bool so_membership(const BilinearForm& form, const QMatrix& m) {
  if (m.rows() != form.size() || m.cols() != form.size()) throw DimensionError("so_membership: size mismatch");
  // q(Mx, y) + q(x, My) = 0 on the basis  <=>  M^T G + G M = 0
  const QMatrix g = form.gram();
  return (m.transpose() * g + g * m).is_zero();
}

bool so_membership(const MukaiExtension& h, const QMatrix& m) { return so_membership(h.pairing(), m); }

bool is_isometry(const BilinearForm& form, const QMatrix& m) {
  if (m.rows() != form.size() || m.cols() != form.size()) throw DimensionError("is_isometry: size mismatch");
  return m.transpose() * form.gram() * m == form.gram();
}

bool is_isometry(const BilinearForm& from, const BilinearForm& to, const QMatrix& m) {
  if (m.rows() != to.size() || m.cols() != from.size()) throw DimensionError("is_isometry: size mismatch");
  return m.transpose() * to.gram() * m == from.gram();
}

bool is_isometry(const MukaiExtension& h, const QMatrix& m) { return is_isometry(h.pairing(), m); }
bool is_isometry(const BBFLattice& l, const QMatrix& m) { return is_isometry(l.form(), m); }

bool respects_grading(const MukaiExtension& h, const GradedOperator& op) {
  if (op.matrix.rows() != h.dim() || op.matrix.cols() != h.dim()) throw DimensionError("respects_grading: size mismatch");
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (std::size_t i = 0; i < h.dim(); ++i)
      if (sgn(op.matrix(i, j)) != 0 && h.degree_of(i) != h.degree_of(j) + op.degree) return false;
  return true;
}

QMatrix exp_nilpotent(const QMatrix& n) {
  if (!n.is_square()) throw DimensionError("exp_nilpotent: matrix is not square");
  QMatrix result = QMatrix::identity(n.rows());
  QMatrix term = QMatrix::identity(n.rows());
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    term = make_rational(1, static_cast<unsigned long>(k)) * (term * n);
    if (term.is_zero()) return result;
    result += term;
  }
  if (!(term * n).is_zero()) throw PreconditionError("exp_nilpotent: matrix is not nilpotent");
  return result;
}

QMatrix reflection(const BilinearForm& form, const QVector& v) {
  const Rational norm = form.norm(v);
  if (sgn(norm) == 0) throw PreconditionError("reflection in an isotropic vector");
  const std::size_t d = form.size();
  QMatrix m = QMatrix::identity(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Rational c = 2 * form(QVector::unit(d, j), v) / norm;
    for (std::size_t i = 0; i < d; ++i) m(i, j) -= c * v[i];
  }
  return m;
}

}  // namespace llv

#include "llv/rational.hpp"

#include "llv/errors.hpp"

#include <cctype>

namespace llv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  Integer value(std::string(digits), 10);
  return text.front() == '-' ? Integer(-value) : value;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("denominator must be unsigned in \"" + std::string(text) + "\"");
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

}  // namespace llv

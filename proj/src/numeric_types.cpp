#include "toriclift/numeric_types.hpp"

#include <cctype>

namespace toriclift {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw ParseError("not an exact rational literal: \"" + std::string(whole) + "\"");
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw ParseError("not an exact rational literal: \"" + std::string(text) + "\"");
  Integer den(std::string{den_text});
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  // The two-argument constructor canonicalizes; the string constructor does not.
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Integer floor(const Rational& r) {
  Integer q = numerator(r) / denominator(r);  // truncates toward zero
  if (r.sign() < 0 && Rational(q) != r) q -= 1;
  return q;
}

}  // namespace toriclift

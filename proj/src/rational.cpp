#include "sgs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sgs {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int_part(std::string_view s) {
  s = trimmed(s);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  if (pos == s.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t i = pos; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad digit in integer: " + std::string(s));
  return Int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view s) {
  s = trimmed(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int_part(s));
  Int num = parse_int_part(s.substr(0, slash));
  Int den = parse_int_part(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string render_rational(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string render_int(const Int& n) { return n.str(); }

}  // namespace sgs

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sgs {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_of(std::int64_t num, std::int64_t den = 1) {
  return Rational(Int(num), Int(den));
}

// Accepts "p", "-p", "p/q" with optional surrounding spaces. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string render_rational(const Rational& q);

std::string render_int(const Int& n);

}  // namespace sgs

#pragma once

#include "sgs/rational.hpp"

#include <vector>

namespace sgs {

// Dense univariate polynomial over the rationals.
// Invariant: coeff is empty (the zero polynomial) or coeff.back() != 0.
struct Poly {
  std::vector<Rational> coeff;  // coeff[i] multiplies x^i

  static Poly zero() { return {}; }
  static Poly constant(const Rational& c);
  static Poly x();

  bool is_zero() const { return coeff.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeff.size()) - 1; }

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  // Antiderivative with constant term 0.
  Poly antiderivative() const;

  void normalize();

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly operator+(const Poly&, const Poly&);
Poly operator-(const Poly&, const Poly&);
Poly operator-(const Poly&);
Poly operator*(const Poly&, const Poly&);
Poly operator*(const Rational&, const Poly&);

std::string render_poly(const Poly&);

}  // namespace sgs

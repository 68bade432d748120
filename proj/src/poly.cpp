#include "sgs/poly.hpp"

#include <algorithm>

namespace sgs {

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.coeff.push_back(c);
  return p;
}

Poly Poly::x() {
  Poly p;
  p.coeff = {Rational(0), Rational(1)};
  return p;
}

void Poly::normalize() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  Poly d;
  for (std::size_t i = 1; i < coeff.size(); ++i) d.coeff.push_back(Rational(Int(i)) * coeff[i]);
  d.normalize();
  return d;
}

Poly Poly::antiderivative() const {
  Poly a;
  if (coeff.empty()) return a;
  a.coeff.resize(coeff.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeff.size(); ++i) a.coeff[i + 1] = coeff[i] / Rational(Int(i + 1));
  a.normalize();
  return a;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) r.coeff[i] += a.coeff[i];
  for (std::size_t i = 0; i < b.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
  r.normalize();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeff) c = -c;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeff.resize(a.coeff.size() + b.coeff.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  r.normalize();
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r = p;
  for (auto& q : r.coeff) q = c * q;
  r.normalize();
  return r;
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    bool unit = (mag == 1) && i > 0;
    if (!unit) out += render_rational(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace sgs

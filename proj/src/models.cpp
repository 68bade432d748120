#include "sgs/models.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace sgs {

Elem int_elem(std::int64_t n) { return elem_of(Int(n)); }
HomRef int_label(std::uint64_t n) { return HomRef{n}; }
HomRef pp_label(std::uint64_t order) { return HomRef{order}; }

SGroup make_int_sgroup() {
  SGroup sg;
  sg.name = "int";
  sg.group = GroupModel{
      [] { return elem_of(Int(0)); },
      [](const Elem& a, const Elem& b) { return elem_of(Int(a.as<Int>() + b.as<Int>())); },
      [](const Elem& a) { return elem_of(Int(-a.as<Int>())); },
      [](const Elem& a, const Elem& b) { return a.as<Int>() == b.as<Int>(); },
      [](Rng& rng) { return int_elem(uniform_int(rng, -50, 50)); },
      [](const Elem& a) { return render_int(a.as<Int>()); },
  };
  sg.labels = LabelMonoid{
      HomRef{1},
      [](HomRef a, HomRef b) { return HomRef{a.id * b.id}; },
      [](HomRef a, HomRef b) { return a == b; },
      [](HomRef a) { return a.id == 1 ? std::string("I_G") : "f_" + std::to_string(a.id); },
      [](Rng& rng) { return HomRef{static_cast<std::uint64_t>(uniform_int(rng, 1, 12))}; },
  };
  sg.hom = [](HomRef f) {
    Int n(f.id);
    if (n < 1) throw std::invalid_argument("int label must be positive");
    return HomOracle{
        [n](const Elem& a) { return a.as<Int>() % n == 0; },
        [n](const Elem& a) { return elem_of(Int(a.as<Int>() / n)); },
        [n](const Elem& a) { return elem_of(Int(a.as<Int>() * n)); },
        [](const Elem& a) { return a.as<Int>() == 0; },
        [](Rng&) { return elem_of(Int(0)); },
    };
  };
  return sg;
}

SGroup make_pp_sgroup(const Interval& iv) {
  SGroup sg;
  sg.name = "pp" + render_interval(iv);
  sg.group = GroupModel{
      [iv] { return elem_of(pp_zero(iv)); },
      [](const Elem& a, const Elem& b) {
        return elem_of(pp_add(a.as<PPFunction>(), b.as<PPFunction>()));
      },
      [](const Elem& a) { return elem_of(pp_neg(a.as<PPFunction>())); },
      [](const Elem& a, const Elem& b) { return pp_eq(a.as<PPFunction>(), b.as<PPFunction>()); },
      [iv](Rng& rng) { return elem_of(sample_pp(rng, iv)); },
      [](const Elem& a) { return render_pp(a.as<PPFunction>()); },
  };
  sg.labels = LabelMonoid{
      HomRef{0},
      [](HomRef a, HomRef b) { return HomRef{a.id + b.id}; },
      [](HomRef a, HomRef b) { return a == b; },
      [](HomRef a) { return a.id == 0 ? std::string("I_G") : "d^" + std::to_string(a.id); },
      [](Rng& rng) { return HomRef{static_cast<std::uint64_t>(uniform_int(rng, 0, 4))}; },
  };
  sg.hom = [iv](HomRef f) {
    int n = static_cast<int>(f.id);
    return HomOracle{
        [n](const Elem& a) { return pp_regularity_order(a.as<PPFunction>()) >= n; },
        [n](const Elem& a) { return elem_of(pp_derivative_n(a.as<PPFunction>(), n)); },
        [n](const Elem& a) { return elem_of(pp_antiderivative_n(a.as<PPFunction>(), n)); },
        [n](const Elem& a) { return pp_is_poly_deg_lt(a.as<PPFunction>(), n); },
        [n, iv](Rng& rng) {
          Poly p = n == 0 ? Poly::zero() : sample_poly(rng, n - 1);
          return elem_of(pp_from_poly(iv, p));
        },
    };
  };
  return sg;
}

SGroup make_trivial_sgroup(int p) {
  if (p < 2) throw std::invalid_argument("modulus too small");
  SGroup sg;
  sg.name = "trivial-mod-" + std::to_string(p);
  Int P(p);
  auto norm = [P](Int a) {
    a %= P;
    if (a < 0) a += P;
    return a;
  };
  sg.group = GroupModel{
      [] { return elem_of(Int(0)); },
      [norm](const Elem& a, const Elem& b) { return elem_of(norm(a.as<Int>() + b.as<Int>())); },
      [norm](const Elem& a) { return elem_of(norm(-a.as<Int>())); },
      [](const Elem& a, const Elem& b) { return a.as<Int>() == b.as<Int>(); },
      [p](Rng& rng) { return int_elem(uniform_int(rng, 0, p - 1)); },
      [](const Elem& a) { return render_int(a.as<Int>()); },
  };
  sg.labels = LabelMonoid{
      HomRef{1},
      [p](HomRef a, HomRef b) { return HomRef{(a.id * b.id) % static_cast<std::uint64_t>(p)}; },
      [](HomRef a, HomRef b) { return a == b; },
      [](HomRef a) { return a.id == 1 ? std::string("I_G") : "m_" + std::to_string(a.id); },
      [p](Rng& rng) { return HomRef{static_cast<std::uint64_t>(uniform_int(rng, 1, p - 1))}; },
  };
  sg.hom = [P, norm](HomRef f) {
    Int k(f.id);
    // Inverse of k mod P by exponentiation; P is expected prime.
    Int kinv(1), base = k, e = P - 2;
    while (e > 0) {
      if (e % 2 == 1) kinv = kinv * base % P;
      base = base * base % P;
      e /= 2;
    }
    return HomOracle{
        [](const Elem&) { return true; },
        [k, norm](const Elem& a) { return elem_of(norm(k * a.as<Int>())); },
        [kinv, norm](const Elem& a) { return elem_of(norm(kinv * a.as<Int>())); },
        [](const Elem& a) { return a.as<Int>() == 0; },
        [](Rng&) { return elem_of(Int(0)); },
    };
  };
  return sg;
}

SGroup make_zero_sgroup() {
  SGroup sg;
  sg.name = "zero";
  sg.group = GroupModel{
      [] { return elem_of(Int(0)); },
      [](const Elem&, const Elem&) { return elem_of(Int(0)); },
      [](const Elem&) { return elem_of(Int(0)); },
      [](const Elem&, const Elem&) { return true; },
      [](Rng&) { return elem_of(Int(0)); },
      [](const Elem&) { return std::string("0"); },
  };
  sg.labels = LabelMonoid{
      HomRef{0},
      [](HomRef, HomRef) { return HomRef{0}; },
      [](HomRef, HomRef) { return true; },
      [](HomRef) { return std::string("I_G"); },
      [](Rng&) { return HomRef{0}; },
  };
  sg.hom = [](HomRef) {
    return HomOracle{
        [](const Elem&) { return true; },
        [](const Elem&) { return elem_of(Int(0)); },
        [](const Elem&) { return elem_of(Int(0)); },
        [](const Elem&) { return true; },
        [](Rng&) { return elem_of(Int(0)); },
    };
  };
  return sg;
}

const std::vector<ModelDescriptor>& model_registry() {
  static const std::vector<ModelDescriptor> reg = {
      {"int", "integers with division maps", [] { return make_int_sgroup(); }},
      {"pp", "piecewise polynomials on (-2,2) with derivative maps",
       [] { return make_pp_sgroup({rational_of(-2), rational_of(2)}); }},
      {"trivial", "integers mod 5 with multiplication automorphisms",
       [] { return make_trivial_sgroup(5); }},
  };
  return reg;
}

const ModelDescriptor* find_model(std::string_view name) {
  for (const auto& m : model_registry())
    if (m.name == name) return &m;
  return nullptr;
}

Rational FractionOracle::value(const Int& m, const Int& n) const {
  if (n == 0) throw std::invalid_argument("zero denominator");
  return Rational(m, n);
}

Rational FractionOracle::add(const Rational& a, const Rational& b) const { return a + b; }

std::vector<Rational> FractionOracle::enumerate(int max_den, const Rational& bound) const {
  std::set<Rational> out;
  for (Int q = 1; q <= max_den; ++q) {
    const Rational window = bound * q;
    Int pmax = boost::multiprecision::numerator(window) /
               boost::multiprecision::denominator(window);
    for (Int p = -pmax; p <= pmax; ++p) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      Rational v(p, q);
      if (abs(v) <= bound) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

FractionOracle fraction_oracle() { return {}; }

}  // namespace sgs

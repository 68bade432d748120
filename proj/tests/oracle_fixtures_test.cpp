// Frozen reference values the other suites lean on: the independent fraction
// oracle and the piecewise-polynomial calculus fixtures. Seeds fixed below.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgs/models.hpp"
#include "sgs/ppfunction.hpp"

using namespace sgs;

namespace {

Interval iv(int lo, int hi) { return {rational_of(lo), rational_of(hi)}; }

// |x - c| as a two-piece function when c is interior.
PPFunction abs_about(const Interval& dom, const Rational& c) {
  Poly left{{c, rational_of(-1)}};
  Poly right{{-c, rational_of(1)}};
  left.normalize();
  right.normalize();
  PPFunction f{dom, {c}, {left, right}};
  pp_validate(f);
  return f;
}

}  // namespace

TEST_CASE("fraction oracle enumerates the denominator-12 window") {
  FractionOracle oracle = fraction_oracle();
  auto table = oracle.enumerate(12, rational_of(2));
  CHECK(table.size() == 185);
  // Sorted, distinct, reduced, inside the window.
  for (std::size_t i = 0; i + 1 < table.size(); ++i) CHECK(table[i] < table[i + 1]);
  for (const auto& q : table) {
    CHECK(abs(q) <= rational_of(2));
    CHECK(boost::multiprecision::denominator(q) <= 12);
  }
  CHECK(std::count(table.begin(), table.end(), rational_of(5, 6)) == 1);
  CHECK(std::count(table.begin(), table.end(), rational_of(-23, 12)) == 1);
  CHECK(std::count(table.begin(), table.end(), rational_of(0)) == 1);
  // Unreduced or out-of-window values never appear twice or at all.
  CHECK(std::count(table.begin(), table.end(), rational_of(25, 12)) == 0);
}

TEST_CASE("fraction oracle arithmetic") {
  FractionOracle oracle = fraction_oracle();
  CHECK(oracle.value(Int(5), Int(6)) == rational_of(5, 6));
  CHECK(oracle.value(Int(-4), Int(8)) == rational_of(-1, 2));
  CHECK(oracle.add(rational_of(1, 2), rational_of(1, 3)) == rational_of(5, 6));
  CHECK(oracle.add(rational_of(1, 2), rational_of(-1, 2)) == rational_of(0));
}

TEST_CASE("derivative of x|x| is 2|x|") {
  Interval dom = iv(-1, 1);
  PPFunction absf = abs_about(dom, rational_of(0));
  PPFunction xabs = pp_mul(pp_from_poly(dom, Poly::x()), absf);
  CHECK(pp_regularity_order(xabs) == 1);
  PPFunction two_abs = pp_add(absf, absf);
  CHECK(pp_eq(pp_derivative(xabs), two_abs));
}

TEST_CASE("antiderivatives vanish at the domain midpoint") {
  Interval dom = iv(-1, 1);
  PPFunction absf = abs_about(dom, rational_of(0));
  PPFunction anti = pp_antiderivative(pp_add(absf, absf));
  // The normalized antiderivative of 2|x| on (-1,1) is exactly x|x|.
  CHECK(pp_eq(anti, pp_mul(pp_from_poly(dom, Poly::x()), absf)));

  Interval dom2 = iv(0, 3);
  PPFunction g = pp_antiderivative(abs_about(dom2, rational_of(1)));
  CHECK(pp_eval(g, dom2.midpoint()) == rational_of(0));
  CHECK(pp_eq(pp_derivative(g), abs_about(dom2, rational_of(1))));
}

TEST_CASE("regularity order fixtures") {
  Interval dom = iv(-1, 1);
  PPFunction absf = abs_about(dom, rational_of(0));
  PPFunction xabs = pp_mul(pp_from_poly(dom, Poly::x()), absf);
  CHECK(pp_regularity_order(absf) == 0);
  CHECK(pp_regularity_order(xabs) == 1);
  CHECK(pp_regularity_order(pp_mul(pp_from_poly(dom, Poly::x()), xabs)) == 2);
  CHECK(pp_regularity_order(pp_from_poly(dom, Poly::x())) == kRegularityInf);
  CHECK(pp_regularity_order(pp_zero(dom)) == kRegularityInf);
}

TEST_CASE("kernel membership is polynomial degree") {
  Interval dom = iv(-1, 1);
  CHECK(pp_is_poly_deg_lt(pp_from_poly(dom, Poly::constant(rational_of(3))), 1));
  CHECK(!pp_is_poly_deg_lt(pp_from_poly(dom, Poly::x()), 1));
  CHECK(pp_is_poly_deg_lt(pp_from_poly(dom, Poly::x()), 2));
  CHECK(!pp_is_poly_deg_lt(abs_about(dom, rational_of(0)), 5));
  CHECK(pp_is_poly_deg_lt(pp_zero(dom), 1));
}

TEST_CASE("patch merge agrees with the global function") {
  Interval dom = iv(0, 3);
  PPFunction global = abs_about(dom, rational_of(1));
  Interval left = iv(0, 2), right = iv(1, 3);
  auto merged = pp_merge(dom, {{left, pp_restrict(global, left)},
                               {right, pp_restrict(global, right)}});
  REQUIRE(merged.has_value());
  CHECK(pp_eq(*merged, global));

  // A disagreeing right patch is refused.
  auto bad = pp_merge(dom, {{left, pp_restrict(global, left)},
                            {right, pp_from_poly(right, Poly::constant(rational_of(7)))}});
  CHECK(!bad.has_value());
  // Gaps are refused.
  auto gap = pp_merge(dom, {{iv(0, 1), pp_restrict(global, iv(0, 1))},
                            {iv(2, 3), pp_restrict(global, iv(2, 3))}});
  CHECK(!gap.has_value());
}

TEST_CASE("restriction and evaluation spots") {
  Interval dom = iv(-1, 1);
  PPFunction absf = abs_about(dom, rational_of(0));
  CHECK(pp_eval(absf, rational_of(-1, 2)) == rational_of(1, 2));
  PPFunction r = pp_restrict(absf, {rational_of(0), rational_of(1)});
  CHECK(r.breaks.empty());
  CHECK(pp_eq(r, pp_from_poly({rational_of(0), rational_of(1)}, Poly::x())));
}

TEST_CASE("derivative and antiderivative invert on smooth samples") {
  Rng rng(0xfeedbeefULL);  // fixed
  Interval dom = iv(-2, 2);
  for (int i = 0; i < 50; ++i) {
    PPFunction f = sample_pp(rng, dom);
    PPFunction a = pp_antiderivative(f);
    CHECK(pp_regularity_order(a) >= 1);
    CHECK(pp_eq(pp_derivative(a), f));
  }
}

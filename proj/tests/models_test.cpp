// Oracle behavior of the three base models and the registry. Seeds fixed.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgs/models.hpp"

using namespace sgs;

namespace {
Interval iv(int lo, int hi) { return {rational_of(lo), rational_of(hi)}; }
}

TEST_CASE("integer model division oracles") {
  SGroup sg = make_int_sgroup();
  CHECK(sg.name == "int");
  HomOracle f3 = sg.hom(int_label(3));
  CHECK(f3.in_domain(int_elem(6)));
  CHECK(f3.in_domain(int_elem(-9)));
  CHECK(!f3.in_domain(int_elem(7)));
  CHECK(sg.group.eq(f3.apply(int_elem(6)), int_elem(2)));
  CHECK(sg.group.eq(f3.preimage(int_elem(2)), int_elem(6)));
  CHECK(f3.in_kernel(int_elem(0)));
  CHECK(!f3.in_kernel(int_elem(3)));
  Rng rng(5);
  CHECK(sg.group.eq(f3.kernel_sample(rng), int_elem(0)));
  // Labels multiply.
  CHECK(sg.labels.equal(sg.labels.compose(int_label(4), int_label(5)), int_label(20)));
  CHECK(sg.labels.render(int_label(3)) == "f_3");
}

TEST_CASE("piecewise model differentiation oracles") {
  Interval dom = iv(-1, 1);
  SGroup sg = make_pp_sgroup(dom);
  HomOracle d1 = sg.hom(pp_label(1));
  HomOracle d2 = sg.hom(pp_label(2));

  PPFunction absf{dom, {rational_of(0)}, {Poly{{rational_of(0), rational_of(-1)}},
                                          Poly{{rational_of(0), rational_of(1)}}}};
  pp_validate(absf);
  PPFunction xabs = pp_mul(pp_from_poly(dom, Poly::x()), absf);

  CHECK(!d1.in_domain(elem_of(absf)));
  CHECK(d1.in_domain(elem_of(xabs)));
  CHECK(!d2.in_domain(elem_of(xabs)));
  CHECK(pp_eq(d1.apply(elem_of(xabs)).as<PPFunction>(), pp_add(absf, absf)));

  // Preimage is the normalized antiderivative, a genuine witness.
  Elem w = d2.preimage(elem_of(absf));
  CHECK(d2.in_domain(w));
  CHECK(pp_eq(d2.apply(w).as<PPFunction>(), absf));

  // Kernel of d^2 is the polynomials of degree < 2.
  CHECK(d2.in_kernel(elem_of(pp_from_poly(dom, Poly::x()))));
  CHECK(!d2.in_kernel(elem_of(pp_from_poly(dom, Poly::x() * Poly::x()))));
  CHECK(!d2.in_kernel(elem_of(absf)));
  Rng rng(7);
  for (int i = 0; i < 20; ++i) CHECK(d2.in_kernel(d2.kernel_sample(rng)));

  // Labels add orders; d^0 is the identity.
  CHECK(sg.labels.equal(sg.labels.compose(pp_label(1), pp_label(2)), pp_label(3)));
  CHECK(sg.labels.equal(sg.labels.identity, pp_label(0)));
}

TEST_CASE("trivial model automorphisms") {
  SGroup sg = make_trivial_sgroup(5);
  HomOracle m2 = sg.hom(HomRef{2});
  // Total and invertible.
  for (int m = -6; m <= 6; ++m) CHECK(m2.in_domain(int_elem(m)));
  CHECK(sg.group.eq(m2.apply(int_elem(3)), int_elem(1)));
  CHECK(sg.group.eq(m2.preimage(int_elem(1)), int_elem(3)));
  CHECK(m2.in_kernel(int_elem(0)));
  // Carrier elements are canonical 0..4; operations normalize their outputs.
  CHECK(m2.in_kernel(sg.group.add(int_elem(2), int_elem(3))));
  CHECK(!m2.in_kernel(int_elem(2)));
  // Addition wraps.
  CHECK(sg.group.eq(sg.group.add(int_elem(3), int_elem(4)), int_elem(2)));
  CHECK(make_trivial_sgroup(5).labels.equal(sg.labels.compose(HomRef{2}, HomRef{3}),
                                            HomRef{1}));  // 6 = 1 mod 5
}

TEST_CASE("zero model carries one element") {
  SGroup sg = make_zero_sgroup();
  Rng rng(3);
  CHECK(sg.group.eq(sg.group.sample(rng), sg.group.zero()));
  CHECK(sg.group.eq(sg.group.negate(sg.group.zero()), sg.group.zero()));
  HomOracle id = sg.hom(sg.labels.identity);
  CHECK(id.in_domain(sg.group.zero()));
  CHECK(id.in_kernel(sg.group.zero()));
}

TEST_CASE("registry lookups") {
  CHECK(model_registry().size() == 3);
  REQUIRE(find_model("int") != nullptr);
  REQUIRE(find_model("pp") != nullptr);
  REQUIRE(find_model("trivial") != nullptr);
  CHECK(find_model("nope") == nullptr);
  CHECK(find_model("pp")->make().name.find("pp") != std::string::npos);
}

TEST_CASE("model samples stay in advertised windows") {
  SGroup sg = make_int_sgroup();
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Int m = sg.group.sample(rng).as<Int>();
    CHECK(abs(m) <= 50);
    HomRef l = sg.labels.sample(rng);
    CHECK(l.id >= 1);
    CHECK(l.id <= 12);
  }
  SGroup pp = make_pp_sgroup(iv(-2, 2));
  for (int i = 0; i < 30; ++i) {
    PPFunction f = pp.group.sample(rng).as<PPFunction>();
    CHECK(f.domain == iv(-2, 2));
    CHECK(pp.labels.sample(rng).id <= 4);
  }
}

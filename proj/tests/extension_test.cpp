// The enlargement of one base structure: class equality, arithmetic,
// embedding, prolongation, strictness, closedness, and map transport.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgs/extension.hpp"
#include "sgs/models.hpp"

using namespace sgs;

namespace {

const std::uint64_t kSeed = 23;

ExtElement icls(std::uint64_t n, std::int64_t m) {
  return ExtElement{{HomRef{n}, int_elem(m)}};
}

Interval iv(int lo, int hi) { return {rational_of(lo), rational_of(hi)}; }

PPFunction abs_fn(const Interval& dom) {
  PPFunction f{dom, {rational_of(0)}, {Poly{{rational_of(0), rational_of(-1)}},
                                       Poly{{rational_of(0), rational_of(1)}}}};
  pp_validate(f);
  return f;
}

}  // namespace

TEST_CASE("integer classes are fractions") {
  SGroup z = make_int_sgroup();
  ExtSGroup ext = make_extension(z);
  CHECK(ext.sim(icls(2, 1), icls(4, 2)));       // 1/2 = 2/4
  CHECK(!ext.sim(icls(2, 1), icls(3, 1)));      // 1/2 != 1/3
  CHECK(ext.sim(ext.add(icls(2, 1), icls(3, 1)), icls(6, 5)));
  CHECK(ext.sim(ext.negate(icls(2, 1)), icls(2, -1)));
  CHECK(ext.sim(ext.sub(icls(2, 1), icls(2, 1)), ext.zero()));
  CHECK(ext.sim(ext.embed(int_elem(3)), icls(1, 3)));
  // Prolonged division really divides.
  CHECK(ext.sim(ext.prolong(int_label(2), ext.embed(int_elem(3))), icls(2, 3)));
  // Embedded value reads back only integer-valued classes.
  auto v = ext.embedded_value(icls(2, 4));
  REQUIRE(v.has_value());
  CHECK(z.group.eq(*v, int_elem(2)));
  CHECK(!ext.embedded_value(icls(2, 3)).has_value());
}

TEST_CASE("representative changes stay in class") {
  SGroup z = make_int_sgroup();
  ExtSGroup ext = make_extension(z);
  Rng rng(kSeed);
  for (int i = 0; i < 300; ++i) {
    ExtElement x = ext.sample(rng);
    CHECK(ext.sim(x, ext.raise(x)));
    CHECK(ext.sim(x, ext.perturb_rep(x, rng)));
    CHECK(ext.sim(x, ext.raise(ext.raise(x))));
  }
}

TEST_CASE("piecewise classes collapse exactly when smooth") {
  Interval dom = iv(-1, 1);
  SGroup pp = make_pp_sgroup(dom);
  ExtSGroup ext = make_extension(pp);
  PPFunction absf = abs_fn(dom);
  PPFunction xabs = pp_mul(pp_from_poly(dom, Poly::x()), absf);

  // [d^1, x|x|] is the embedded function 2|x|.
  ExtElement dxabs{{pp_label(1), elem_of(xabs)}};
  auto v = ext.embedded_value(dxabs);
  REQUIRE(v.has_value());
  CHECK(pp_eq(v->as<PPFunction>(), pp_add(absf, absf)));
  CHECK(ext.sim(dxabs, ext.embed(elem_of(pp_add(absf, absf)))));

  // [d^1, |x|] is a new entity.
  ExtElement dabs{{pp_label(1), elem_of(absf)}};
  CHECK(!ext.embedded_value(dabs).has_value());

  // Kernel shifts leave the class alone; non-kernel shifts change it.
  ExtElement shifted{{pp_label(1), elem_of(pp_add(absf, pp_from_poly(dom, Poly::constant(
                                                            rational_of(5)))))}};
  CHECK(ext.sim(dabs, shifted));
  ExtElement moved{{pp_label(1), elem_of(pp_add(absf, pp_from_poly(dom, Poly::x() * Poly::x())))}};
  CHECK(!ext.sim(dabs, moved));
}

TEST_CASE("strictness and closedness audits accept every model") {
  for (const auto& md : model_registry()) {
    SGroup sg = md.make();
    ExtSGroup ext = make_extension(sg);
    AuditReport rs = verify_strict(ext, 200, kSeed);
    AuditReport rc = verify_closed(ext, 200, kSeed + 1);
    INFO(sg.name);
    for (const auto& v : rs.verdicts) {
      INFO(v.axiom << " " << v.counterexample);
      CHECK(v.pass);
    }
    CHECK(rs.accepted());
    CHECK(rc.accepted());
  }
}

TEST_CASE("total automorphisms collapse the enlargement") {
  SGroup t = make_trivial_sgroup();
  ExtSGroup ext = make_extension(t);
  Rng rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    ExtElement x = ext.sample(rng);
    CHECK(ext.embedded_value(x).has_value());
  }
}

TEST_CASE("free function aliases agree with members") {
  SGroup z = make_int_sgroup();
  ExtSGroup ext = make_extension(z);
  CHECK(sim(ext, ext_add(ext, icls(2, 1), icls(3, 1)), icls(6, 5)));
  CHECK(sim(ext, ext_embed(ext, int_elem(4)), icls(1, 4)));
  CHECK(sim(ext, prolong_apply(ext, int_label(3), icls(2, 1)), icls(6, 1)));
}

TEST_CASE("homomorphism transport") {
  SGroup z = make_int_sgroup();
  ExtSGroup ext = make_extension(z);
  LiftSpec spec{&z, &z,
                [](const Elem& a) { return elem_of(Int(a.as<Int>() * 5)); },
                [](HomRef l) { return l; }};
  LiftedHom lifted = lift_hom(spec);
  CHECK(ext.sim(lifted.apply(icls(2, 1)), icls(2, 5)));
  CHECK(ext.sim(lifted.apply(ext.zero()), ext.zero()));
  AuditReport r = audit_lift(spec, ext, ext, 200, kSeed);
  for (const auto& v : r.verdicts) {
    INFO(v.axiom << " " << v.counterexample);
    CHECK(v.pass);
  }

  // A non-additive map is rejected.
  LiftSpec bad{&z, &z,
               [](const Elem& a) { return elem_of(Int(a.as<Int>() + 1)); },
               [](HomRef l) { return l; }};
  CHECK(!audit_lift(bad, ext, ext, 200, kSeed).accepted());

  // A map that breaks the label intertwine is rejected: doubling the label
  // on one side misroutes every division.
  LiftSpec twisted{&z, &z,
                   [](const Elem& a) { return a; },
                   [](HomRef l) { return HomRef{l.id * 2}; }};
  CHECK(!audit_lift(twisted, ext, ext, 200, kSeed).accepted());
}

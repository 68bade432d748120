// JSON round trips for every serialized value shape, plus rejection of
// malformed input and byte-stable re-serialization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sgs/models.hpp"
#include "sgs/serialize.hpp"
#include "sgs/tess.hpp"

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

TEST_CASE("rational round trip") {
  for (const char* s : {"0", "1", "-7", "5/6", "-23/12", "1000000000000000000000/7"}) {
    Rational q = rational_from_json(Json(s));
    CHECK(rational_to_json(q) == Json(s));
  }
  // Integral values may also arrive as JSON numbers.
  CHECK(rational_from_json(Json(42)) == rational_of(42));
  CHECK_THROWS_AS((void)rational_from_json(Json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS((void)rational_from_json(Json("abc")), std::invalid_argument);
  CHECK_THROWS_AS((void)rational_from_json(Json(nullptr)), std::invalid_argument);
}

TEST_CASE("piecewise function round trip") {
  Poly quad{{rational_of(1, 2), rational_of(0), rational_of(3)}};
  PPFunction f = pp_add(abs_about(iv(-1, 1), rational_of(0)), pp_from_poly(iv(-1, 1), quad));
  Json j = pp_to_json(f);
  PPFunction g = pp_from_json(j);
  CHECK(pp_eq(f, g));
  CHECK(pp_to_json(g) == j);

  Json bad = j;
  bad["pieces"][0] = Json::array({"1/0"});
  CHECK_THROWS_AS((void)pp_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS((void)pp_from_json(Json{{"pieces", 3}}), std::invalid_argument);
}

TEST_CASE("region round trip") {
  for (Region r : {Region::of(iv(0, 3)), Region::empty(), Region::whole()}) {
    CHECK(region_from_json(region_to_json(r)) == r);
  }
  CHECK_THROWS_AS((void)region_from_json(Json("nonsense")), std::invalid_argument);
}

TEST_CASE("extension element round trip per model") {
  Rng rng(71);
  SGroup z = make_int_sgroup();
  ExtSGroup zext = make_extension(z);
  SGroup pp = make_pp_sgroup(iv(-1, 1));
  ExtSGroup ppext = make_extension(pp);
  SGroup tv = make_trivial_sgroup();
  ExtSGroup tvext = make_extension(tv);

  struct Row {
    const char* name;
    ExtSGroup* ext;
  } rows[] = {{"int", &zext}, {"pp", &ppext}, {"trivial", &tvext}};
  for (auto& row : rows) {
    for (int i = 0; i < 10; ++i) {
      ExtElement e = row.ext->sample(rng);
      Json j = ext_to_json(row.name, e);
      auto [name, back] = ext_from_json(j);
      CHECK(name == row.name);
      CHECK(row.ext->sim(back, e));
      CHECK(ext_to_json(row.name, back) == j);
    }
  }

  // Integers that overflow 64 bits travel as strings.
  ExtElement big{{HomRef{1}, elem_of(Int("123456789012345678901234567890"))}};
  auto [nm, back] = ext_from_json(ext_to_json("int", big));
  CHECK(nm == "int");
  CHECK(zext.sim(back, big));
  CHECK_THROWS_AS((void)ext_from_json(Json{{"model", "int"}}), std::invalid_argument);
}

TEST_CASE("coherent family round trip") {
  SSpace s = make_pp_fixture_sspace();
  TildeSpace t = build_tilde(s);
  BarSpace b = build_bar(t);
  Rng rng(72);
  for (int i = 0; i < 6; ++i) {
    BarElement e = bar_sample(b, Region::of(iv(0, 3)), rng);
    Json j = bar_to_json("pp", e);
    auto [name, back] = bar_from_json(j);
    CHECK(name == "pp");
    CHECK(approx_sim(b, e, back));
    CHECK(bar_to_json("pp", back) == j);
  }
  CHECK_THROWS_AS((void)bar_from_json(Json{{"gamma", "x"}}), std::invalid_argument);
}

TEST_CASE("audit report round trip") {
  SGroup z = make_int_sgroup();
  AuditReport r = audit_sgroup(z, 40, 9);
  r.verdicts.push_back({"demo-axiom", false, "a counterexample"});
  Json j = report_to_json(r);
  AuditReport back = report_from_json(j);
  CHECK(back.system == r.system);
  CHECK(back.seed == r.seed);
  CHECK(back.samples == r.samples);
  REQUIRE(back.verdicts.size() == r.verdicts.size());
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    CHECK(back.verdicts[i].axiom == r.verdicts[i].axiom);
    CHECK(back.verdicts[i].pass == r.verdicts[i].pass);
    CHECK(back.verdicts[i].counterexample == r.verdicts[i].counterexample);
  }
  CHECK(!back.accepted());
  CHECK(report_to_json(back) == j);
}

TEST_CASE("serialization is byte stable") {
  PPFunction f = abs_about(iv(0, 3), rational_of(1));
  std::string once = pp_to_json(f).dump();
  std::string twice = pp_to_json(pp_from_json(Json::parse(once))).dump();
  CHECK(once == twice);
}

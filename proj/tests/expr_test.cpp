// Calculator surface: parsing, evaluation against each model, the printed
// forms, and the failure modes the grammar promises.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sgs/expr.hpp"

using namespace sgs;

namespace {

Interval iv(int lo, int hi) { return {rational_of(lo), rational_of(hi)}; }

CalcValue eval_str(Evaluator& ev, std::string_view src) { return ev.eval(*parse_expr(src)); }

std::string render_str(Evaluator& ev, std::string_view src) {
  CalcValue v = eval_str(ev, src);
  return ev.render(v);
}

}  // namespace

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "x +", "pw[(0,1): x", "D^(x)", "abs(1", "(2,1): x", "x^0",
                          "F0(1)", "glue{}", "1/0", "x * * x"}) {
    try {
      (void)parse_expr(bad);
      FAIL_CHECK("accepted: " << bad);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
  }
}

TEST_CASE("precedence and grouping") {
  Evaluator ev("pp", iv(-1, 1));
  // 1 + 2 * x parses as 1 + (2 * x).
  CalcValue v = eval_str(ev, "1 + 2 * x");
  REQUIRE(v.kind == CalcValue::Kind::fn);
  CHECK(pp_eval(v.fn, rational_of(1, 2)) == rational_of(2));
  // Restriction binds tighter than '*': 2 * x | (0,1) restricts only x.
  CalcValue w = eval_str(ev, "2 * x|(0,1)");
  CHECK(w.region == Region::of(iv(0, 1)));
  // Unary minus distributes over the following term.
  CalcValue m = eval_str(ev, "-(x + 1)");
  CHECK(pp_eval(m.fn, rational_of(0)) == rational_of(-1));
}

TEST_CASE("derivative of the kink is a new entity, second derivative of its integral is not") {
  Evaluator ev("pp", iv(-1, 1));
  // abs is not differentiable, so D^1 leaves the base.
  CalcValue d1 = eval_str(ev, "D^1(abs)");
  REQUIRE(d1.kind == CalcValue::Kind::cls);
  CHECK(!ev.ext_at(d1.region).embedded_value(d1.cls).has_value());
  CHECK(render_str(ev, "D^1(abs)") ==
        "D^1[pw[(-1,0): -x; (0,1): x]] (not a continuous function)");
  // x*abs is C^1 with derivative 2*abs, so one order cancels.
  CHECK(render_str(ev, "D^1(x*abs)") == "pw[(-1,0): -2*x; (0,1): 2*x] (a continuous function)");
  // The difference of the two presentations of 2|x| is the zero class.
  CHECK(render_str(ev, "D^1(x*abs) - 2*abs") == "0 (a continuous function)");
}

TEST_CASE("derivatives of the sawtooth stay outside the base") {
  Evaluator ev("pp", iv(0, 3));
  CalcValue v = eval_str(ev, "D^1(saw(2))");
  REQUIRE(v.kind == CalcValue::Kind::cls);
  CHECK(!ev.ext_at(v.region).embedded_value(v.cls).has_value());
  // Its second derivative is a genuinely order-2 entity.
  CalcValue v2 = eval_str(ev, "D^2(saw(2))");
  ExtElement least = pp_order_reduce(v2.cls);
  CHECK(least.p.label.id == 2);
}

TEST_CASE("piecewise literals must tile continuously") {
  Evaluator ev("pp", iv(0, 2));
  CalcValue ok = eval_str(ev, "pw[(0,1): x; (1,2): 2 - x]");
  CHECK(pp_eval(ok.fn, rational_of(1)) == rational_of(1));
  CHECK_THROWS_AS((void)eval_str(ev, "pw[(0,1): x; (1,2): x + 5]"), std::invalid_argument);
  CHECK_THROWS_AS((void)eval_str(ev, "pw[(0,1): x; (3/2,2): x]"), std::invalid_argument);
}

TEST_CASE("glue assembles agreeing patches and refuses disagreeing ones") {
  Evaluator ev("pp", iv(0, 3));
  CalcValue v = eval_str(ev, "glue{(0,2): D^2(abs(1)|(0,2)); (1,3): D^2(abs(1)|(1,3))}");
  REQUIRE(v.kind == CalcValue::Kind::cls);
  CHECK(v.region == Region::of(iv(0, 3)));
  CalcValue whole = eval_str(ev, "D^2(abs(1))");
  CHECK(ev.ext_at(v.region).sim(v.cls, whole.cls));
  CHECK_THROWS_AS((void)eval_str(ev, "glue{(0,2): D^2(abs(1)|(0,2)); (1,3): 1|(1,3)}"),
                  EvalFailure);
  CHECK_THROWS_AS((void)eval_str(ev, "glue{(0,1): 1|(0,1); (2,3): 1|(2,3)}"), EvalFailure);
}

TEST_CASE("integer scaling of classes matches scaling the representative") {
  Evaluator ev("pp", iv(-1, 1));
  CalcValue two_d = eval_str(ev, "2 * D^1(abs)");
  CalcValue d_two = eval_str(ev, "D^1(2 * abs)");
  CHECK(ev.ext_at(two_d.region).sim(two_d.cls, d_two.cls));
  // Fractional multiples of a class have no meaning here, nor do products.
  CHECK_THROWS_AS((void)eval_str(ev, "1/2 * D^1(abs)"), std::invalid_argument);
  CHECK_THROWS_AS((void)eval_str(ev, "D^1(abs) * D^1(abs)"), std::invalid_argument);
  CHECK_THROWS_AS((void)eval_str(ev, "x * D^1(abs)"), std::invalid_argument);
}

TEST_CASE("restriction narrows and chains") {
  Evaluator ev("pp", iv(0, 3));
  CalcValue v = eval_str(ev, "D^2(abs(1))|(1,3)|(3/2,2)");
  CHECK(v.region == Region::of({rational_of(3, 2), rational_of(2)}));
  // Away from the kink the point mass restricts to the embedded zero.
  CHECK(ev.ext_at(v.region).sim(v.cls, ev.ext_at(v.region).zero()));
  CHECK_THROWS_AS((void)eval_str(ev, "abs(1)|(2,5)"), std::invalid_argument);
}

TEST_CASE("integer classes print as fractions") {
  Evaluator ev("int", iv(0, 1));
  CHECK(render_str(ev, "F2(1) + F3(1)") == "5/6 = [f_6, 5]");
  CHECK(render_str(ev, "-F2(1)") == "-1/2 = [f_2, -1]");
  // Repeated addition walks the label up; the fraction is unchanged.
  CHECK(render_str(ev, "3 * F2(1)") == "3/2 = [f_8, 12]");
  CHECK(render_str(ev, "2 - F2(4)") == "0 = [I_G, 0]");
  // Integer literals embed; functions of x do not exist in this model.
  CHECK_THROWS_AS((void)eval_str(ev, "x"), std::invalid_argument);
  CHECK_THROWS_AS((void)eval_str(ev, "D^1(2)"), std::invalid_argument);
}

TEST_CASE("trivial model normalizes embedded values") {
  Evaluator ev("trivial", iv(0, 1));
  CalcValue v = eval_str(ev, "3 + 4");
  const ExtSGroup& ext = ev.ext_at(v.region);
  auto back = ext.embedded_value(v.cls);
  REQUIRE(back.has_value());
  CHECK(back->as<Int>() == 2);
}

TEST_CASE("order reduction lands on the least order") {
  Evaluator ev("pp", iv(-1, 1));
  CalcValue v = eval_str(ev, "D^2(x * abs)");
  CHECK(v.cls.p.label.id == 2);
  ExtElement least = pp_order_reduce(v.cls);
  CHECK(least.p.label.id == 1);
  CHECK(ev.ext_at(v.region).sim(least, v.cls));
  // Smooth all the way down: order reaches zero.
  CalcValue s = eval_str(ev, "D^3(x^3)");
  CHECK(pp_order_reduce(s.cls).p.label.id == 0);
}

TEST_CASE("rendered forms quote the region and the shape") {
  Evaluator ev("pp", iv(0, 2));
  CHECK(render_str(ev, "x^2 - x") == "x^2 - x");
  CHECK(render_str(ev, "embed(x)|(0,1)") == "x (a continuous function)");
  CHECK(render_str(ev, "D^2(abs(1))") ==
        "D^2[pw[(0,1): -x + 1; (1,2): x - 1]] (not a continuous function)");
}

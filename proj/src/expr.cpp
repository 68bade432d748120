#include "sgs/expr.hpp"

#include "sgs/tess.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace sgs {

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool ident_ahead() {
    return std::isalpha(static_cast<unsigned char>(peek()));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) fail("expected a name");
    return std::string(src.substr(start, pos - start));
  }

  bool number_ahead() {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }
  Int integer() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) (void)accept('+');
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    Int n{std::string(src.substr(start, pos - start))};
    return neg ? Int(-n) : n;
  }
  int nat() {
    Int n = integer();
    if (n < 0 || n > 64) fail("count out of range");
    return static_cast<int>(n);
  }
  Rational rational() {
    Int num = integer();
    if (pos < src.size() && src[pos] == '/') {
      ++pos;
      Int den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }
  Interval interval() {
    expect('(');
    Rational lo = rational();
    expect(',');
    Rational hi = rational();
    expect(')');
    if (!(lo < hi)) fail("empty interval");
    return {lo, hi};
  }
};

ExprPtr node(ExprAST::Kind k) {
  auto n = std::make_unique<ExprAST>();
  n->kind = k;
  return n;
}

ExprPtr parse_sum(Lexer&);

ExprPtr parse_atom(Lexer& lx) {
  if (lx.number_ahead()) {
    auto n = node(ExprAST::Kind::number);
    n->num = lx.rational();
    return n;
  }
  if (lx.accept('(')) {
    ExprPtr e = parse_sum(lx);
    lx.expect(')');
    return e;
  }
  if (!lx.ident_ahead()) lx.fail("expected a value");
  std::string name = lx.ident();
  if (name == "x") {
    auto n = node(ExprAST::Kind::var_x);
    n->arg = lx.accept('^') ? lx.nat() : 1;
    if (n->arg < 1) lx.fail("power must be positive");
    return n;
  }
  if (name == "abs") {
    auto n = node(ExprAST::Kind::abs);
    if (lx.accept('(')) {
      n->num = lx.rational();
      lx.expect(')');
    }
    return n;
  }
  if (name == "saw") {
    auto n = node(ExprAST::Kind::saw);
    lx.expect('(');
    n->arg = lx.nat();
    lx.expect(')');
    if (n->arg < 1) lx.fail("saw needs at least one kink");
    return n;
  }
  if (name == "pw" || name == "glue") {
    auto n = node(name == "pw" ? ExprAST::Kind::pw : ExprAST::Kind::glue);
    lx.expect(name == "pw" ? '[' : '{');
    do {
      Interval iv = lx.interval();
      lx.expect(':');
      n->parts.emplace_back(iv, parse_sum(lx));
    } while (lx.accept(';'));
    lx.expect(name == "pw" ? ']' : '}');
    return n;
  }
  if (name == "D") {
    auto n = node(ExprAST::Kind::deriv);
    lx.expect('^');
    n->arg = lx.nat();
    lx.expect('(');
    n->kids.push_back(parse_sum(lx));
    lx.expect(')');
    return n;
  }
  if (name == "embed") {
    auto n = node(ExprAST::Kind::embed_fn);
    lx.expect('(');
    n->kids.push_back(parse_sum(lx));
    lx.expect(')');
    return n;
  }
  if (name == "F") {
    auto n = node(ExprAST::Kind::fclass);
    n->arg = lx.nat();
    if (n->arg < 1) lx.fail("label index must be positive");
    lx.expect('(');
    n->m = lx.integer();
    lx.expect(')');
    return n;
  }
  lx.fail("unknown name: " + name);
}

ExprPtr parse_postfix(Lexer& lx) {
  ExprPtr e = parse_atom(lx);
  while (lx.accept('|')) {
    auto n = node(ExprAST::Kind::restrict_to);
    n->iv = lx.interval();
    n->kids.push_back(std::move(e));
    e = std::move(n);
  }
  return e;
}

ExprPtr parse_product(Lexer& lx) {
  ExprPtr e = parse_postfix(lx);
  while (lx.accept('*')) {
    auto n = node(ExprAST::Kind::mul);
    n->kids.push_back(std::move(e));
    n->kids.push_back(parse_postfix(lx));
    e = std::move(n);
  }
  return e;
}

ExprPtr parse_term(Lexer& lx) {
  if (lx.accept('-')) {
    auto n = node(ExprAST::Kind::neg);
    n->kids.push_back(parse_term(lx));
    return n;
  }
  return parse_product(lx);
}

ExprPtr parse_sum(Lexer& lx) {
  ExprPtr e = parse_term(lx);
  for (;;) {
    if (lx.accept('+')) {
      auto n = node(ExprAST::Kind::add);
      n->kids.push_back(std::move(e));
      n->kids.push_back(parse_term(lx));
      e = std::move(n);
    } else if (lx.accept('-')) {
      auto n = node(ExprAST::Kind::sub);
      n->kids.push_back(std::move(e));
      n->kids.push_back(parse_term(lx));
      e = std::move(n);
    } else {
      return e;
    }
  }
}

PPFunction make_abs(const Interval& iv, const Rational& c) {
  Poly left{{c, Rational(-1)}};   // c - x
  Poly right{{-c, Rational(1)}};  // x - c
  left.normalize();
  right.normalize();
  if (!(iv.lo < c) || !(c < iv.hi)) return pp_from_poly(iv, c <= iv.lo ? right : left);
  PPFunction f{iv, {c}, {left, right}};
  pp_validate(f);
  return f;
}

PPFunction make_saw(const Interval& iv, int kinks) {
  Rational w = (iv.hi - iv.lo) / (kinks + 1);
  PPFunction f;
  f.domain = iv;
  Rational at = iv.lo, value = 0;
  for (int j = 0; j <= kinks; ++j) {
    Rational slope = j % 2 == 0 ? 1 : -1;
    Poly piece{{value - slope * at, slope}};
    piece.normalize();
    f.pieces.push_back(piece);
    if (j < kinks) f.breaks.push_back(at + w);
    value += slope * w;
    at += w;
  }
  pp_validate(f);
  return f;
}

ExtElement scale_class(const ExtSGroup& e, ExtElement x, Int k) {
  if (k < 0) {
    x = e.negate(x);
    k = -k;
  }
  ExtElement acc = e.zero();
  while (k > 0) {
    if (k % 2 == 1) acc = e.add(acc, x);
    k /= 2;
    if (k > 0) x = e.add(x, x);
  }
  return acc;
}

}  // namespace

ExprPtr parse_expr(std::string_view src) {
  Lexer lx{src};
  ExprPtr e = parse_sum(lx);
  if (lx.peek() != '\0') lx.fail("trailing input");
  return e;
}

ExtElement pp_order_reduce(const ExtElement& x) {
  PPFunction f = x.p.rep.as<PPFunction>();
  std::uint64_t n = x.p.label.id;
  while (n >= 1 && pp_regularity_order(f) >= 1) {
    f = pp_derivative(f);
    --n;
  }
  return ExtElement{{HomRef{n}, elem_of(f)}};
}

Evaluator::Evaluator(std::string model, Interval domain)
    : model_(std::move(model)), domain_(domain) {}

const Evaluator::Node& Evaluator::at(const Region& r) {
  auto it = cache_.find(r);
  if (it == cache_.end()) {
    auto node = std::make_unique<Node>();
    if (model_ == "pp") {
      if (r.kind != Region::Kind::interval)
        throw std::invalid_argument("function classes need an interval region");
      node->sg = make_pp_sgroup(r.iv);
    } else {
      const ModelDescriptor* md = find_model(model_);
      if (!md) throw std::invalid_argument("unknown model: " + model_);
      node->sg = md->make();
    }
    it = cache_.emplace(r, std::move(node)).first;
    it->second->ext = make_extension(it->second->sg);
  }
  return *it->second;
}

const ExtSGroup& Evaluator::ext_at(const Region& r) { return at(r).ext; }
const SGroup& Evaluator::group_of(const Region& r) { return at(r).sg; }

CalcValue Evaluator::eval(const ExprAST& e) {
  Region top = model_ == "pp" ? Region::of(domain_) : Region::whole();
  return eval_in(e, top);
}

PPFunction Evaluator::eval_fn(const ExprAST& e, const Region& r) {
  CalcValue v = eval_in(e, r);
  if (v.kind != CalcValue::Kind::fn)
    throw std::invalid_argument("a function literal is required here");
  return v.fn;
}

ExtElement Evaluator::as_class(const CalcValue& v) {
  if (v.kind == CalcValue::Kind::cls) return v.cls;
  return at(v.region).ext.embed(elem_of(v.fn));
}

CalcValue Evaluator::eval_in(const ExprAST& e, const Region& r) {
  const bool pp = model_ == "pp";
  auto fn_value = [&](PPFunction f) {
    CalcValue v;
    v.kind = CalcValue::Kind::fn;
    v.region = Region::of(f.domain);
    v.fn = std::move(f);
    return v;
  };
  auto cls_value = [&](const Region& reg, ExtElement x) {
    CalcValue v;
    v.kind = CalcValue::Kind::cls;
    v.region = reg;
    v.cls = std::move(x);
    return v;
  };

  switch (e.kind) {
    case ExprAST::Kind::number: {
      if (pp) return fn_value(pp_from_poly(r.iv, Poly::constant(e.num)));
      if (boost::multiprecision::denominator(e.num) != 1)
        throw std::invalid_argument("this model has integer individuals only");
      const Node& n = at(r);
      Elem g = n.sg.group.add(n.sg.group.zero(),
                              elem_of(Int(boost::multiprecision::numerator(e.num))));
      return cls_value(r, n.ext.embed(g));
    }
    case ExprAST::Kind::var_x: {
      if (!pp) throw std::invalid_argument("x needs the piecewise polynomial model");
      Poly p = Poly::x();
      Poly acc = Poly::constant(1);
      for (int i = 0; i < e.arg; ++i) acc = acc * p;
      return fn_value(pp_from_poly(r.iv, acc));
    }
    case ExprAST::Kind::abs:
      if (!pp) throw std::invalid_argument("abs needs the piecewise polynomial model");
      return fn_value(make_abs(r.iv, e.num));
    case ExprAST::Kind::saw:
      if (!pp) throw std::invalid_argument("saw needs the piecewise polynomial model");
      return fn_value(make_saw(r.iv, e.arg));
    case ExprAST::Kind::pw: {
      if (!pp) throw std::invalid_argument("tables need the piecewise polynomial model");
      auto parts = std::vector<std::pair<Interval, PPFunction>>{};
      for (const auto& [iv, sub] : e.parts)
        parts.emplace_back(iv, eval_fn(*sub, Region::of(iv)));
      std::sort(parts.begin(), parts.end(),
                [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
      PPFunction f;
      f.domain = r.iv;
      if (parts.front().first.lo != r.iv.lo || parts.back().first.hi != r.iv.hi)
        throw std::invalid_argument("table must tile the evaluation interval");
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
          if (parts[i].first.lo != parts[i - 1].first.hi)
            throw std::invalid_argument("table segments must share endpoints");
          f.breaks.push_back(parts[i].first.lo);
        }
        const PPFunction& seg = parts[i].second;
        f.breaks.insert(f.breaks.end(), seg.breaks.begin(), seg.breaks.end());
        f.pieces.insert(f.pieces.end(), seg.pieces.begin(), seg.pieces.end());
      }
      // Joins where the polynomial continues are not breaks.
      PPFunction packed;
      packed.domain = f.domain;
      packed.pieces.push_back(f.pieces[0]);
      for (std::size_t i = 0; i < f.breaks.size(); ++i) {
        if (f.pieces[i + 1] == packed.pieces.back()) continue;
        packed.breaks.push_back(f.breaks[i]);
        packed.pieces.push_back(f.pieces[i + 1]);
      }
      pp_validate(packed);
      return fn_value(packed);
    }
    case ExprAST::Kind::fclass: {
      if (model_ != "int")
        throw std::invalid_argument("F classes need the integer model");
      return cls_value(Region::whole(),
                       ExtElement{{HomRef{static_cast<std::uint64_t>(e.arg)}, elem_of(e.m)}});
    }
    case ExprAST::Kind::neg: {
      CalcValue v = eval_in(*e.kids[0], r);
      if (v.kind == CalcValue::Kind::fn) return fn_value(pp_neg(v.fn));
      return cls_value(v.region, at(v.region).ext.negate(v.cls));
    }
    case ExprAST::Kind::add:
    case ExprAST::Kind::sub: {
      CalcValue a = eval_in(*e.kids[0], r);
      CalcValue b = eval_in(*e.kids[1], r);
      const bool take_sub = e.kind == ExprAST::Kind::sub;
      if (a.kind == CalcValue::Kind::fn && b.kind == CalcValue::Kind::fn)
        return fn_value(take_sub ? pp_sub(a.fn, b.fn) : pp_add(a.fn, b.fn));
      if (!(a.region == b.region))
        throw std::invalid_argument("operands live over different regions");
      const ExtSGroup& ext = at(a.region).ext;
      ExtElement xa = as_class(a), xb = as_class(b);
      return cls_value(a.region, take_sub ? ext.sub(xa, xb) : ext.add(xa, xb));
    }
    case ExprAST::Kind::mul: {
      const ExprAST* scalar = nullptr;
      const ExprAST* other = nullptr;
      if (e.kids[0]->kind == ExprAST::Kind::number) {
        scalar = e.kids[0].get();
        other = e.kids[1].get();
      } else if (e.kids[1]->kind == ExprAST::Kind::number) {
        scalar = e.kids[1].get();
        other = e.kids[0].get();
      }
      if (scalar != nullptr) {
        CalcValue v = eval_in(*other, r);
        if (v.kind == CalcValue::Kind::fn)
          return fn_value(pp_mul(pp_from_poly(v.fn.domain, Poly::constant(scalar->num)), v.fn));
        if (boost::multiprecision::denominator(scalar->num) != 1)
          throw std::invalid_argument("classes scale by integers only");
        return cls_value(v.region,
                         scale_class(at(v.region).ext, v.cls,
                                     Int(boost::multiprecision::numerator(scalar->num))));
      }
      CalcValue a = eval_in(*e.kids[0], r);
      CalcValue b = eval_in(*e.kids[1], r);
      if (a.kind != CalcValue::Kind::fn || b.kind != CalcValue::Kind::fn)
        throw std::invalid_argument("products act on function literals only");
      return fn_value(pp_mul(a.fn, b.fn));
    }
    case ExprAST::Kind::deriv: {
      if (!pp) throw std::invalid_argument("derivatives need the piecewise polynomial model");
      CalcValue v = eval_in(*e.kids[0], r);
      Region home = v.region;
      ExtElement x = as_class(v);
      return cls_value(home, at(home).ext.prolong(
                                 HomRef{static_cast<std::uint64_t>(e.arg)}, x));
    }
    case ExprAST::Kind::restrict_to: {
      if (!pp) throw std::invalid_argument("restriction needs the piecewise polynomial model");
      CalcValue v = eval_in(*e.kids[0], r);
      Region target = Region::of(e.iv);
      if (!subset(target, v.region))
        throw std::invalid_argument("restriction target is not inside " +
                                    render_region(v.region));
      if (v.kind == CalcValue::Kind::fn) return fn_value(pp_restrict(v.fn, e.iv));
      ExtElement moved{{v.cls.p.label, elem_of(pp_restrict(v.cls.p.rep.as<PPFunction>(), e.iv))}};
      return cls_value(target, std::move(moved));
    }
    case ExprAST::Kind::embed_fn: {
      CalcValue v = eval_in(*e.kids[0], r);
      if (v.kind != CalcValue::Kind::fn)
        throw std::invalid_argument("embed takes a function literal");
      return cls_value(v.region, at(v.region).ext.embed(elem_of(v.fn)));
    }
    case ExprAST::Kind::glue: {
      if (!pp) throw std::invalid_argument("gluing needs the piecewise polynomial model");
      Cover cover;
      std::vector<ExtElement> patches;
      Rational lo, hi;
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        const auto& [iv, sub] = e.parts[i];
        cover.push_back(Region::of(iv));
        patches.push_back(as_class(eval_in(*sub, Region::of(iv))));
        lo = i == 0 ? iv.lo : std::min(lo, iv.lo);
        hi = i == 0 ? iv.hi : std::max(hi, iv.hi);
      }
      Region target = Region::of({lo, hi});
      if (!covers(target, cover)) throw EvalFailure{"patches do not cover " +
                                                    render_region(target)};
      auto merged = merge_pp_patches(target, cover, patches);
      if (!merged) throw EvalFailure{"patches disagree on an overlap"};
      return cls_value(target, *merged);
    }
  }
  throw std::invalid_argument("unreachable expression kind");
}

std::string Evaluator::render(const CalcValue& v) {
  if (v.kind == CalcValue::Kind::fn) return render_pp(v.fn);
  if (model_ == "pp") {
    ExtElement red = pp_order_reduce(v.cls);
    const PPFunction& f = red.p.rep.as<PPFunction>();
    if (red.p.label.id == 0) return render_pp(f) + " (a continuous function)";
    return "D^" + std::to_string(red.p.label.id) + "[" + render_pp(f) +
           "] (not a continuous function)";
  }
  const Node& n = at(v.region);
  std::string cls = n.ext.render(v.cls);
  if (model_ == "int") {
    Rational q(v.cls.p.rep.as<Int>(), Int(v.cls.p.label.id));
    return render_rational(q) + " = " + cls;
  }
  return cls;
}

}  // namespace sgs

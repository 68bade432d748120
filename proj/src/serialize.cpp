#include "sgs/serialize.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sgs {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field: ") + key);
  return *it;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  bad("expected an integer or integer string");
}

Json int_to_json(const Int& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(n));
  return Json(render_int(n));
}

}  // namespace

Json rational_to_json(const Rational& q) { return Json(render_rational(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) bad("expected a rational string");
  return parse_rational(j.get<std::string>());
}

Json pp_to_json(const PPFunction& f) {
  Json j = Json::object();
  j["domain"] = Json::array({rational_to_json(f.domain.lo), rational_to_json(f.domain.hi)});
  Json breaks = Json::array();
  for (const Rational& b : f.breaks) breaks.push_back(rational_to_json(b));
  j["breaks"] = std::move(breaks);
  Json pieces = Json::array();
  for (const Poly& p : f.pieces) {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeff) coeffs.push_back(rational_to_json(c));
    pieces.push_back(std::move(coeffs));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

PPFunction pp_from_json(const Json& j) {
  PPFunction f;
  const Json& dom = field(j, "domain");
  if (!dom.is_array() || dom.size() != 2) bad("domain must be a pair");
  f.domain = {rational_from_json(dom[0]), rational_from_json(dom[1])};
  for (const Json& b : field(j, "breaks")) f.breaks.push_back(rational_from_json(b));
  for (const Json& piece : field(j, "pieces")) {
    Poly p;
    for (const Json& c : piece) p.coeff.push_back(rational_from_json(c));
    while (!p.coeff.empty() && p.coeff.back() == 0) p.coeff.pop_back();
    f.pieces.push_back(std::move(p));
  }
  pp_validate(f);
  return f;
}

Json region_to_json(const Region& r) { return Json(render_region(r)); }

Region region_from_json(const Json& j) {
  if (!j.is_string()) bad("expected a region string");
  return parse_region(j.get<std::string>());
}

Json ext_to_json(std::string_view model, const ExtElement& x) {
  Json j = Json::object();
  j["model"] = std::string(model);
  if (model == "pp") {
    j["order"] = x.p.label.id;
    j["function"] = pp_to_json(x.p.rep.as<PPFunction>());
  } else if (model == "int") {
    j["n"] = x.p.label.id;
    j["m"] = int_to_json(x.p.rep.as<Int>());
  } else if (model == "trivial") {
    j["k"] = x.p.label.id;
    j["m"] = int_to_json(x.p.rep.as<Int>());
  } else {
    bad("unknown model: " + std::string(model));
  }
  return j;
}

std::pair<std::string, ExtElement> ext_from_json(const Json& j) {
  std::string model = field(j, "model").get<std::string>();
  if (model == "pp") {
    HomRef label{field(j, "order").get<std::uint64_t>()};
    return {model, ExtElement{{label, elem_of(pp_from_json(field(j, "function")))}}};
  }
  if (model == "int") {
    HomRef label{field(j, "n").get<std::uint64_t>()};
    if (label.id < 1) bad("label must be positive");
    return {model, ExtElement{{label, elem_of(int_from_json(field(j, "m")))}}};
  }
  if (model == "trivial") {
    HomRef label{field(j, "k").get<std::uint64_t>()};
    return {model, ExtElement{{label, elem_of(int_from_json(field(j, "m")))}}};
  }
  bad("unknown model: " + model);
}

Json bar_to_json(std::string_view model, const BarElement& x) {
  Json j = Json::object();
  j["model"] = std::string(model);
  j["region"] = region_to_json(x.fam.gamma);
  Json cover = Json::array();
  for (const Region& r : x.fam.cover) cover.push_back(region_to_json(r));
  j["cover"] = std::move(cover);
  Json patches = Json::array();
  for (const ExtElement& p : x.fam.patches) patches.push_back(ext_to_json(model, p));
  j["patches"] = std::move(patches);
  return j;
}

std::pair<std::string, BarElement> bar_from_json(const Json& j) {
  std::string model = field(j, "model").get<std::string>();
  BarElement x;
  x.fam.gamma = region_from_json(field(j, "region"));
  for (const Json& r : field(j, "cover")) x.fam.cover.push_back(region_from_json(r));
  for (const Json& p : field(j, "patches")) {
    auto [m, e] = ext_from_json(p);
    if (m != model) bad("patch model disagrees with family model");
    x.fam.patches.push_back(std::move(e));
  }
  if (x.fam.cover.size() != x.fam.patches.size()) bad("cover and patches differ in length");
  return {std::move(model), std::move(x)};
}

Json report_to_json(const AuditReport& r) {
  Json j = Json::object();
  j["system"] = r.system;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["accepted"] = r.accepted();
  Json verdicts = Json::array();
  for (const AxiomVerdict& v : r.verdicts) {
    Json vj = Json::object();
    vj["axiom"] = v.axiom;
    vj["pass"] = v.pass;
    if (!v.pass) vj["counterexample"] = v.counterexample;
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

AuditReport report_from_json(const Json& j) {
  AuditReport r;
  r.system = field(j, "system").get<std::string>();
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.samples = field(j, "samples").get<int>();
  for (const Json& vj : field(j, "verdicts")) {
    AxiomVerdict v;
    v.axiom = field(vj, "axiom").get<std::string>();
    v.pass = field(vj, "pass").get<bool>();
    if (auto it = vj.find("counterexample"); it != vj.end())
      v.counterexample = it->get<std::string>();
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

}  // namespace sgs

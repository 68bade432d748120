#include "sgs/cli.hpp"

#include "sgs/axioms.hpp"
#include "sgs/expr.hpp"
#include "sgs/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace sgs {

namespace {

SGroup build_base(const std::string& model, const std::string& domain) {
  if (model == "pp") return make_pp_sgroup(parse_interval(domain));
  const ModelDescriptor* md = find_model(model);
  if (!md) throw std::invalid_argument("unknown model: " + model);
  return md->make();
}

void emit_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << j.dump(2) << "\n";
}

int eval_and_print(Evaluator& ev, const std::string& text, const std::string& out_path,
                   std::ostream& out) {
  ExprPtr ast = parse_expr(text);
  CalcValue v = ev.eval(*ast);
  out << render_region(v.region) << ": " << ev.render(v) << "\n";
  Json j;
  if (v.kind == CalcValue::Kind::fn) {
    j = Json{{"result", "function"},
             {"region", render_region(v.region)},
             {"function", pp_to_json(v.fn)}};
  } else {
    ExtElement x = ev.model() == "pp" ? pp_order_reduce(v.cls) : v.cls;
    j = Json{{"result", "class"},
             {"region", render_region(v.region)},
             {"class", ext_to_json(ev.model(), x)}};
  }
  emit_json(j, out_path, out);
  return 0;
}

int run_calc(const std::string& model, const std::string& domain, const std::string& text,
             const std::string& out_path, std::ostream& out) {
  Evaluator ev(model, parse_interval(domain));
  return eval_and_print(ev, text, out_path, out);
}

int run_glue(const std::string& model, const std::string& domain,
             const std::vector<std::string>& parts, const std::string& out_path,
             std::ostream& out) {
  std::string text = "glue{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) text += "; ";
    text += parts[i];
  }
  text += "}";
  Evaluator ev(model, parse_interval(domain));
  return eval_and_print(ev, text, out_path, out);
}

int run_audit(const std::string& spec_path, const std::string& level, const std::string& variant,
              int samples, std::uint64_t seed, const std::string& mutation,
              const std::string& out_path, std::ostream& out) {
  std::ifstream in(spec_path);
  if (!in) throw std::invalid_argument("cannot open " + spec_path);
  Json spec = Json::parse(in);
  const std::string model = spec.at("model").get<std::string>();
  const std::string domain = spec.value("domain", "(-2,2)");
  const std::string structure = spec.value("structure", "extension");
  if (!mutation.empty() && level != "axioms")
    throw std::invalid_argument("--mutate applies to --level axioms only");

  // Everything a candidate may point into lives for the whole audit.
  SGroup base;
  ExtSGroup ext;
  SSpace fixture;
  TildeSpace tilde;
  BarSpace bar;

  AuditReport report;
  if (level == "sgroup") {
    base = build_base(model, domain);
    report = audit_sgroup(base, samples, seed);
    AuditReport transfer = transfer_suite(base, samples, seed);
    report.verdicts.insert(report.verdicts.end(), transfer.verdicts.begin(),
                           transfer.verdicts.end());
  } else if (level == "sspace" || level == "tess1" || level == "tess2") {
    if (model != "pp")
      throw std::invalid_argument("level " + level + " runs on the piecewise model fixture");
    fixture = make_pp_fixture_sspace();
    if (level == "sspace") {
      report = sspace_validate(fixture, samples, seed);
    } else {
      tilde = build_tilde(fixture);
      if (level == "tess1") {
        report = verify_1tess(tilde, samples, seed);
      } else {
        bar = build_bar(tilde);
        report = verify_2tess(bar, samples, seed);
      }
    }
  } else if (level == "axioms") {
    CandidateStructure cand;
    if (structure == "extension") {
      base = build_base(model, domain);
      ext = make_extension(base);
      cand = candidate_of(ext);
    } else if (structure == "stage-one" || structure == "stage-two") {
      if (model != "pp")
        throw std::invalid_argument("structure " + structure + " needs the piecewise model");
      fixture = make_pp_fixture_sspace();
      tilde = build_tilde(fixture);
      if (structure == "stage-one") {
        cand = candidate_of(tilde);
      } else {
        bar = build_bar(tilde);
        cand = candidate_of(bar);
      }
    } else {
      throw std::invalid_argument("unknown structure: " + structure);
    }
    if (!mutation.empty()) cand = mutate(cand, mutation);
    report = variant == "simplified" ? check_simplified(cand, samples, seed)
                                     : check_full(cand, samples, seed);
  } else {
    throw std::invalid_argument("unknown level: " + level);
  }

  out << render_report(report);
  if (!out_path.empty()) emit_json(report_to_json(report), out_path, out);
  return report.accepted() ? 0 : 1;
}

int demo_zq(std::ostream& out) {
  FractionOracle oracle = fraction_oracle();
  const std::vector<Rational> table = oracle.enumerate(12, Rational(2));
  out << "reduced fractions with denominator <= 12 and magnitude <= 2: " << table.size()
      << "\n";
  for (int d = 1; d <= 12; ++d) {
    out << "  den " << d << ":";
    for (const auto& q : table)
      if (boost::multiprecision::denominator(q) == d) out << " " << render_rational(q);
    out << "\n";
  }

  SGroup z = make_int_sgroup();
  ExtSGroup ext = make_extension(z);
  auto cls = [](const Rational& q) {
    return ExtElement{
        {HomRef{static_cast<std::uint64_t>(boost::multiprecision::denominator(q))},
         elem_of(Int(boost::multiprecision::numerator(q)))}};
  };

  bool injective = true;
  for (std::size_t i = 0; i + 1 < table.size(); ++i)
    injective = injective && !ext.sim(cls(table[i]), cls(table[i + 1]));
  out << "distinct fractions name distinct classes: " << (injective ? "yes" : "NO") << "\n";

  bool additive = true;
  for (std::size_t i = 0; i < table.size(); i += 3) {
    const Rational& a = table[i];
    const Rational& b = table[(7 * i + 3) % table.size()];
    additive = additive && ext.sim(ext.add(cls(a), cls(b)), cls(oracle.add(a, b)));
  }
  out << "class addition matches fraction addition: " << (additive ? "yes" : "NO") << "\n";
  out << "every class [f_n, m] names the fraction m/n, so the map is onto\n";

  const bool ok = injective && additive;
  out << (ok ? "isomorphism verified\n" : "isomorphism check FAILED\n");
  return ok ? 0 : 1;
}

int demo_delta(std::ostream& out) {
  Evaluator ev("pp", parse_interval("(0,2)"));
  auto show = [&](const std::string& text) {
    ExprPtr ast = parse_expr(text);
    CalcValue v = ev.eval(*ast);
    out << "  " << text << "  ->  " << ev.render(v) << " on " << render_region(v.region)
        << "\n";
    return v;
  };
  out << "the kink |x - 1| on (0,2) and its derivative classes:\n";
  CalcValue d1 = show("D^1(abs(1))");
  CalcValue d2 = show("D^2(abs(1))");
  out << "away from the kink both collapse to ordinary functions:\n";
  CalcValue r1 = show("D^1(abs(1))|(1,2)");
  CalcValue r2 = show("D^2(abs(1))|(1,2)");

  bool ok = true;
  ok = ok && !ev.ext_at(d1.region).embedded_value(d1.cls).has_value();
  ok = ok && !ev.ext_at(d2.region).embedded_value(d2.cls).has_value();
  auto e1 = ev.ext_at(r1.region).embedded_value(r1.cls);
  ok = ok && e1.has_value() &&
       pp_eq(e1->as<PPFunction>(), pp_from_poly(parse_interval("(1,2)"), Poly::constant(1)));
  auto e2 = ev.ext_at(r2.region).embedded_value(r2.cls);
  ok = ok && e2.has_value() && pp_is_zero(e2->as<PPFunction>());
  out << (ok ? "the first two are new entities, the restrictions are the functions 1 and 0\n"
             : "unexpected embedding behavior\n");
  return ok ? 0 : 1;
}

int demo_glue(std::ostream& out) {
  SSpace s = make_pp_fixture_sspace();
  TildeSpace t = build_tilde(s);
  BarSpace b = build_bar(t);
  const Region r02 = Region::of(parse_interval("(0,2)"));
  const Region r13 = Region::of(parse_interval("(1,3)"));
  const Region r12 = Region::of(parse_interval("(1,2)"));
  const Region r03 = Region::of(parse_interval("(0,3)"));

  ExprPtr d2 = parse_expr("D^2(abs(1))");
  Evaluator e02("pp", r02.iv);
  Evaluator e03("pp", r03.iv);
  ExtElement a = e02.as_class(e02.eval(*d2));
  ExtElement zz = t.tzero(r13);

  out << "coherent family for the point mass at 1:\n";
  out << "  (0,2): " << t.at(r02).render(a) << "\n";
  out << "  (1,3): " << t.at(r13).render(zz) << "\n";
  const bool agree = t.tsim(r12, t.trestrict(r12, r02, a), t.trestrict(r12, r13, zz));
  out << "overlap (1,2): " << (agree ? "patches agree" : "patches DISAGREE") << "\n";

  auto glued = bar_glue(b, r03, {b_embed(b, r02, a), b_embed(b, r13, zz)});
  out << "glue over (0,3): " << (glued ? "produced one class" : "REFUSED") << "\n";
  ExtElement g = e03.as_class(e03.eval(*d2));
  const bool same = glued.has_value() && approx_sim(b, *glued, b_embed(b, r03, g));
  out << "glued class equals the global second derivative: " << (same ? "yes" : "NO") << "\n";
  return agree && same ? 0 : 1;
}

int run_demo(const std::string& name, std::ostream& out) {
  if (name == "zq") return demo_zq(out);
  if (name == "delta") return demo_delta(out);
  if (name == "glue") return demo_glue(out);
  throw std::invalid_argument("unknown demo: " + name);
}

int run_extend(const std::string& model, const std::string& domain, int samples,
               std::uint64_t seed, std::ostream& out) {
  SGroup base = build_base(model, domain);
  ExtSGroup ext = make_extension(base);
  out << "base: " << base.name << "\n";
  Rng rng(seed);
  out << "sample classes:\n";
  for (int i = 0; i < 5; ++i) out << "  " << ext.render(ext.sample(rng)) << "\n";
  AuditReport strict = verify_strict(ext, samples, seed);
  AuditReport closed = verify_closed(ext, samples, seed + 1);
  out << render_report(strict) << render_report(closed);
  return strict.accepted() && closed.accepted() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for group extensions by partial homomorphisms"};
  app.name("distcalc");
  app.require_subcommand(1);

  std::string model = "pp";
  std::string domain = "(-2,2)";
  std::string expr_text;
  std::string spec_path;
  std::string level = "axioms";
  std::string variant = "full";
  std::string mutation;
  std::string out_path;
  std::string demo_name;
  std::vector<std::string> parts;
  int samples = 200;
  std::uint64_t seed = 1;

  CLI::App* calc = app.add_subcommand("calc", "evaluate one expression");
  calc->add_option("expr", expr_text, "expression text")->required();
  calc->add_option("--model", model, "base model name");
  calc->add_option("--domain", domain, "open interval for the piecewise model");
  calc->add_option("--out", out_path, "write the value as JSON to this file");

  CLI::App* audit = app.add_subcommand("audit", "run a structure audit");
  audit->add_option("--spec", spec_path, "JSON file naming model/domain/structure")->required();
  audit->add_option("--level", level, "sgroup|sspace|tess1|tess2|axioms")
      ->check(CLI::IsMember({"sgroup", "sspace", "tess1", "tess2", "axioms"}));
  audit->add_option("--variant", variant, "full|simplified")
      ->check(CLI::IsMember({"full", "simplified"}));
  audit->add_option("--samples", samples, "sample count per check");
  audit->add_option("--seed", seed, "audit seed");
  audit->add_option("--mutate", mutation, "damage the candidate before checking");
  audit->add_option("--out", out_path, "write the report JSON to this file");

  CLI::App* demo = app.add_subcommand("demo", "run a walkthrough");
  demo->add_option("name", demo_name, "zq|delta|glue")
      ->required()
      ->check(CLI::IsMember({"zq", "delta", "glue"}));

  CLI::App* glue_cmd = app.add_subcommand("glue", "glue expression patches");
  glue_cmd->add_option("--model", model, "base model name");
  glue_cmd->add_option("--domain", domain, "ambient open interval");
  glue_cmd->add_option("--part", parts, "one patch as \"(a,b): expr\"")->required();
  glue_cmd->add_option("--out", out_path, "write the value as JSON to this file");

  CLI::App* extend = app.add_subcommand("extend", "build an enlargement and audit it");
  extend->add_option("--model", model, "base model name");
  extend->add_option("--domain", domain, "open interval for the piecewise model");
  extend->add_option("--samples", samples, "sample count per check");
  extend->add_option("--seed", seed, "audit seed");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("distcalc");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (auto& s : full) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (calc->parsed()) return run_calc(model, domain, expr_text, out_path, out);
    if (audit->parsed())
      return run_audit(spec_path, level, variant, samples, seed, mutation, out_path, out);
    if (demo->parsed()) return run_demo(demo_name, out);
    if (glue_cmd->parsed()) return run_glue(model, domain, parts, out_path, out);
    if (extend->parsed()) return run_extend(model, domain, samples, seed, out);
  } catch (const EvalFailure& f) {
    err << "refused: " << f.what << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace sgs

#include "sgs/axioms.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace sgs {

namespace {

Elem nonzero_of(const GroupModel& g) {
  Rng rng(0x5eedf00dULL);
  for (int i = 0; i < 64; ++i) {
    Elem e = g.sample(rng);
    if (!g.eq(e, g.zero())) return e;
  }
  return g.zero();
}

Rational region_probe(const Region& r) {
  if (r.kind == Region::Kind::interval) return r.iv.midpoint();
  if (r.kind == Region::Kind::whole) return Rational(0);
  throw std::invalid_argument("empty region has no probe point");
}

AuditReport check_sgroup(const SGroupCandidate& c, bool full, int samples, std::uint64_t seed) {
  AuditReport rep{std::string(full ? "sgroup-full" : "sgroup-simple") + ":" + c.name, seed,
                  samples, {}};
  Rng rng(seed);
  const SGroup& B = *c.base;
  const GroupModel& G = B.group;

  {
    CheckAcc acc(rep, "individuals");
    for (int i = 0; i < samples; ++i) {
      Elem g = G.sample(rng), h = G.sample(rng);
      acc.expect(c.eq(c.embed(g), c.embed(h)) == G.eq(g, h),
                 G.render(g) + ", " + G.render(h));
      auto back = c.as_base(c.embed(g));
      acc.expect(back.has_value() && G.eq(*back, g), G.render(g));
    }
  }
  if (full) {
    CheckAcc acc(rep, "addition-extends");
    for (int i = 0; i < samples; ++i) {
      Elem g = G.sample(rng), h = G.sample(rng);
      acc.expect(c.eq(c.embed(G.add(g, h)), c.add(c.embed(g), c.embed(h))),
                 G.render(g) + " + " + G.render(h));
    }
  }
  if (full) {
    CheckAcc acc(rep, "derivative-additive");
    for (int i = 0; i < samples; ++i) {
      HomRef f = B.labels.sample(rng);
      Elem x = c.sample(rng), y = c.sample(rng);
      acc.expect(c.eq(c.deriv(f, c.add(x, y)), c.add(c.deriv(f, x), c.deriv(f, y))),
                 B.labels.render(f));
    }
  }
  {
    CheckAcc acc(rep, "derivative-extension");
    for (int i = 0; i < samples; ++i) {
      HomRef f = B.labels.sample(rng);
      HomOracle o = B.hom(f);
      Elem g = o.preimage(G.sample(rng));
      acc.expect(o.in_domain(g) && c.eq(c.deriv(f, c.embed(g)), c.embed(o.apply(g))),
                 B.labels.render(f) + " at " + G.render(g));
    }
  }
  {
    CheckAcc acc(rep, "derivative-semigroup");
    for (int i = 0; i < samples; ++i) {
      HomRef f = B.labels.sample(rng), g = B.labels.sample(rng);
      Elem x = c.sample(rng);
      acc.expect(c.eq(c.deriv(f, c.deriv(g, x)), c.deriv(B.labels.compose(f, g), x)) &&
                     c.eq(c.deriv(B.labels.identity, x), x),
                 B.labels.render(f) + ", " + B.labels.render(g));
    }
  }
  if (full) {
    CheckAcc acc(rep, "strictness");
    for (int i = 0; i < samples; ++i) {
      HomRef f = B.labels.sample(rng);
      HomOracle o = B.hom(f);
      Elem g = G.sample(rng);
      if (o.in_domain(g)) continue;  // nothing asserted on the domain itself
      acc.expect(!c.as_base(c.deriv(f, c.embed(g))).has_value(),
                 B.labels.render(f) + " at " + G.render(g));
    }
  }
  {
    CheckAcc acc(rep, "closedness");
    for (int i = 0; i < samples; ++i) {
      Elem x = c.sample(rng);
      auto [f, g] = c.decompose(x);
      acc.expect(c.eq(x, c.deriv(f, c.embed(g))), B.labels.render(f) + " at " + G.render(g));
    }
  }
  if (!full) {
    CheckAcc acc(rep, "kernel-difference");
    for (int i = 0; i < samples; ++i) {
      HomRef f = B.labels.sample(rng);
      HomOracle o = B.hom(f);
      std::string at = B.labels.render(f);
      Elem g = G.sample(rng);
      Elem h = G.add(g, o.kernel_sample(rng));
      acc.expect(c.eq(c.deriv(f, c.embed(g)), c.deriv(f, c.embed(h))), at + " kernel shift");
      Elem h2 = G.sample(rng);
      acc.expect(c.eq(c.deriv(f, c.embed(g)), c.deriv(f, c.embed(h2))) ==
                     o.in_kernel(sub(G, g, h2)),
                 at + " pair " + G.render(g) + ", " + G.render(h2));
      // Boundary pair: a preimage witness against its own target probes the
      // domain edge, where a defective derivative would collapse classes.
      Elem t = G.sample(rng);
      Elem a = o.preimage(t);
      acc.expect(c.eq(c.deriv(f, c.embed(a)), c.deriv(f, c.embed(t))) ==
                     o.in_kernel(sub(G, a, t)),
                 at + " boundary " + G.render(t));
    }
  }
  return rep;
}

AuditReport check_space(const SpaceCandidate& c, bool full, int samples, std::uint64_t seed) {
  const bool coh = c.coherent_kind;
  std::string sys = coh ? (full ? "coherent-full" : "coherent-simple")
                        : (full ? "space-full" : "space-simple");
  AuditReport rep{sys + ":" + c.name, seed, samples, {}};
  Rng rng(seed);
  const SSpace& S = *c.base;

  std::vector<std::pair<Region, Region>> pairs;  // (to, from), proper
  std::vector<std::tuple<Region, Region, Region>> chains;
  for (const Region& from : c.regions)
    for (const Region& to : c.regions) {
      if (!subset(to, from) || to == from) continue;
      pairs.emplace_back(to, from);
      for (const Region& low : c.regions)
        if (subset(low, to) && !(low == to)) chains.emplace_back(low, to, from);
    }

  auto pick_region = [&](Rng& r) -> const Region& {
    return c.regions[static_cast<std::size_t>(
        uniform_int(r, 0, static_cast<std::int64_t>(c.regions.size()) - 1))];
  };

  {
    CheckAcc acc(rep, "individuals");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const GroupModel& G = group_at(S, r).group;
      Elem g = G.sample(rng), h = G.sample(rng);
      acc.expect(c.eq(r, c.embed(r, g), c.embed(r, h)) == G.eq(g, h),
                 render_region(r) + ": " + G.render(g) + ", " + G.render(h));
      auto back = c.as_base(r, c.embed(r, g));
      acc.expect(back.has_value() && G.eq(*back, g), render_region(r) + ": " + G.render(g));
    }
  }
  {
    CheckAcc acc(rep, "domain");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      Elem x = c.sample(r, rng);
      acc.expect(c.eq(r, x, x) &&
                     c.eq(r, c.add(r, x, c.embed(r, group_at(S, r).group.zero())), x),
                 render_region(r));
      if (!pairs.empty()) {
        const auto& [to, from] = pairs[static_cast<std::size_t>(
            uniform_int(rng, 0, static_cast<std::int64_t>(pairs.size()) - 1))];
        Elem y = c.sample(from, rng);
        Elem ry = c.restr(to, from, y);
        acc.expect(c.eq(to, ry, ry), render_region(to) + "<-" + render_region(from));
      }
    }
  }
  if (full) {
    CheckAcc acc(rep, "addition-extends");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const GroupModel& G = group_at(S, r).group;
      Elem g = G.sample(rng), h = G.sample(rng);
      acc.expect(c.eq(r, c.embed(r, G.add(g, h)), c.add(r, c.embed(r, g), c.embed(r, h))),
                 render_region(r) + ": " + G.render(g) + " + " + G.render(h));
    }
  }
  if (full) {
    CheckAcc acc(rep, "derivative-additive");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const SGroup& B = group_at(S, r);
      HomRef f = B.labels.sample(rng);
      Elem x = c.sample(r, rng), y = c.sample(r, rng);
      acc.expect(c.eq(r, c.deriv(r, f, c.add(r, x, y)),
                      c.add(r, c.deriv(r, f, x), c.deriv(r, f, y))),
                 render_region(r) + ": " + B.labels.render(f));
    }
  }
  {
    CheckAcc acc(rep, "derivative-extension");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const SGroup& B = group_at(S, r);
      HomRef f = B.labels.sample(rng);
      HomOracle o = B.hom(f);
      Elem g = o.preimage(B.group.sample(rng));
      acc.expect(o.in_domain(g) &&
                     c.eq(r, c.deriv(r, f, c.embed(r, g)), c.embed(r, o.apply(g))),
                 render_region(r) + ": " + B.labels.render(f));
    }
  }
  {
    CheckAcc acc(rep, "derivative-semigroup");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const SGroup& B = group_at(S, r);
      HomRef f = B.labels.sample(rng), g = B.labels.sample(rng);
      Elem x = c.sample(r, rng);
      acc.expect(
          c.eq(r, c.deriv(r, f, c.deriv(r, g, x)), c.deriv(r, B.labels.compose(f, g), x)) &&
              c.eq(r, c.deriv(r, B.labels.identity, x), x),
          render_region(r) + ": " + B.labels.render(f) + ", " + B.labels.render(g));
    }
  }
  if (full) {
    CheckAcc acc(rep, "strictness");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const SGroup& B = group_at(S, r);
      HomRef f = B.labels.sample(rng);
      HomOracle o = B.hom(f);
      Elem g = B.group.sample(rng);
      if (o.in_domain(g)) continue;
      acc.expect(!c.as_base(r, c.deriv(r, f, c.embed(r, g))).has_value(),
                 render_region(r) + ": " + B.labels.render(f) + " at " + B.group.render(g));
    }
  }
  if (!coh) {
    CheckAcc acc(rep, "closedness");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const SGroup& B = group_at(S, r);
      Elem x = c.sample(r, rng);
      auto [f, g] = c.decompose(r, x);
      acc.expect(c.eq(r, x, c.deriv(r, f, c.embed(r, g))),
                 render_region(r) + ": " + B.labels.render(f));
    }
  }
  if (!full) {
    CheckAcc acc(rep, "kernel-difference");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      const SGroup& B = group_at(S, r);
      const GroupModel& G = B.group;
      HomRef f = B.labels.sample(rng);
      HomOracle o = B.hom(f);
      std::string at = render_region(r) + ": " + B.labels.render(f);
      Elem g = G.sample(rng);
      Elem h = G.add(g, o.kernel_sample(rng));
      acc.expect(c.eq(r, c.deriv(r, f, c.embed(r, g)), c.deriv(r, f, c.embed(r, h))),
                 at + " kernel shift");
      Elem h2 = G.sample(rng);
      acc.expect(c.eq(r, c.deriv(r, f, c.embed(r, g)), c.deriv(r, f, c.embed(r, h2))) ==
                     o.in_kernel(sub(G, g, h2)),
                 at + " pair");
      Elem t = G.sample(rng);
      Elem a = o.preimage(t);
      acc.expect(c.eq(r, c.deriv(r, f, c.embed(r, a)), c.deriv(r, f, c.embed(r, t))) ==
                     o.in_kernel(sub(G, a, t)),
                 at + " boundary");
    }
  }
  if (full) {
    CheckAcc acc(rep, "restriction-additive");
    for (int i = 0; i < samples && !pairs.empty(); ++i) {
      const auto& [to, from] = pairs[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(pairs.size()) - 1))];
      Elem x = c.sample(from, rng), y = c.sample(from, rng);
      acc.expect(c.eq(to, c.restr(to, from, c.add(from, x, y)),
                      c.add(to, c.restr(to, from, x), c.restr(to, from, y))),
                 render_region(to) + "<-" + render_region(from));
    }
  }
  {
    CheckAcc acc(rep, "restriction-extends");
    for (int i = 0; i < samples && !pairs.empty(); ++i) {
      const auto& [to, from] = pairs[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(pairs.size()) - 1))];
      Elem g = group_at(S, from).group.sample(rng);
      acc.expect(c.eq(to, c.restr(to, from, c.embed(from, g)),
                      c.embed(to, S.restr(to, from, g))),
                 render_region(to) + "<-" + render_region(from));
    }
  }
  {
    CheckAcc acc(rep, "restriction-composition");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      Elem x = c.sample(r, rng);
      acc.expect(c.eq(r, c.restr(r, r, x), x), render_region(r) + " identity");
      if (chains.empty()) continue;
      const auto& [low, mid, from] = chains[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(chains.size()) - 1))];
      Elem y = c.sample(from, rng);
      acc.expect(c.eq(low, c.restr(low, mid, c.restr(mid, from, y)), c.restr(low, from, y)),
                 render_region(low) + "<-" + render_region(mid) + "<-" + render_region(from));
    }
  }
  {
    CheckAcc acc(rep, "restriction-intertwine");
    for (int i = 0; i < samples && !pairs.empty(); ++i) {
      const auto& [to, from] = pairs[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(pairs.size()) - 1))];
      const SGroup& B = group_at(S, from);
      HomRef f = B.labels.sample(rng);
      Elem x = c.sample(from, rng);
      acc.expect(c.eq(to, c.restr(to, from, c.deriv(from, f, x)),
                      c.deriv(to, c.bond(to, from, f), c.restr(to, from, x))),
                 render_region(to) + "<-" + render_region(from) + ": " + B.labels.render(f));
    }
  }
  if (coh) {
    CheckAcc acc(rep, "local-closedness");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      Elem x = c.sample(r, rng);
      Rational p = sample_point(r, rng);
      auto [around, f, g] = c.local_decompose(r, x, p);
      acc.expect(!around.is_empty() && region_contains(around, p) && subset(around, r) &&
                     c.eq(around, c.restr(around, r, x),
                          c.deriv(around, f, c.embed(around, g))),
                 render_region(r) + " at " + render_rational(p));
    }
  }
  if (coh) {
    CheckAcc acc(rep, "gluing");
    for (int i = 0; i < samples; ++i) {
      const Region& r = pick_region(rng);
      Elem x = c.sample(r, rng);
      auto cs = enumerate_covers(S.idx, r);
      const Cover& cov = cs[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(cs.size()) - 1))];
      std::vector<std::pair<Region, Elem>> parts;
      for (const Region& m : cov) parts.emplace_back(m, c.restr(m, r, x));
      auto glued = c.glue(r, parts);
      acc.expect(glued.has_value() && c.eq(r, *glued, x),
                 render_region(r) + " over " + std::to_string(cov.size()) + " pieces");
    }
  }
  return rep;
}

}  // namespace

SGroupCandidate candidate_of(const ExtSGroup& e) {
  SGroupCandidate c;
  c.name = e.base->name;
  c.base = e.base;
  const ExtSGroup* E = &e;
  c.sample = [E](Rng& rng) { return elem_of(E->sample(rng)); };
  c.eq = [E](const Elem& a, const Elem& b) {
    return E->sim(a.as<ExtElement>(), b.as<ExtElement>());
  };
  c.add = [E](const Elem& a, const Elem& b) {
    return elem_of(E->add(a.as<ExtElement>(), b.as<ExtElement>()));
  };
  c.embed = [E](const Elem& g) { return elem_of(E->embed(g)); };
  c.as_base = [E](const Elem& x) { return E->embedded_value(x.as<ExtElement>()); };
  c.deriv = [E](HomRef f, const Elem& x) { return elem_of(E->prolong(f, x.as<ExtElement>())); };
  c.decompose = [](const Elem& x) {
    const PairElement& p = x.as<ExtElement>().p;
    return std::pair<HomRef, Elem>{p.label, p.rep};
  };
  return c;
}

SpaceCandidate candidate_of(const TildeSpace& t) {
  SpaceCandidate c;
  c.name = t.base->name + "/stage-one";
  c.base = t.base;
  for (const Region& r : t.base->idx.regions)
    if (!r.is_empty()) c.regions.push_back(r);
  const TildeSpace* T = &t;
  c.sample = [T](const Region& r, Rng& rng) { return elem_of(T->tsample(r, rng)); };
  c.eq = [T](const Region& r, const Elem& a, const Elem& b) {
    return T->tsim(r, a.as<ExtElement>(), b.as<ExtElement>());
  };
  c.add = [T](const Region& r, const Elem& a, const Elem& b) {
    return elem_of(T->tadd(r, a.as<ExtElement>(), b.as<ExtElement>()));
  };
  c.embed = [T](const Region& r, const Elem& g) { return elem_of(T->tembed(r, g)); };
  c.as_base = [T](const Region& r, const Elem& x) {
    return T->at(r).embedded_value(x.as<ExtElement>());
  };
  c.deriv = [T](const Region& r, HomRef f, const Elem& x) {
    return elem_of(T->tprolong(r, f, x.as<ExtElement>()));
  };
  c.bond = [T](const Region& to, const Region& from, HomRef f) {
    return T->base->bond(to, from, f);
  };
  c.restr = [T](const Region& to, const Region& from, const Elem& x) {
    return elem_of(T->trestrict(to, from, x.as<ExtElement>()));
  };
  c.decompose = [](const Region&, const Elem& x) {
    const PairElement& p = x.as<ExtElement>().p;
    return std::pair<HomRef, Elem>{p.label, p.rep};
  };
  return c;
}

SpaceCandidate candidate_of(const BarSpace& b) {
  SpaceCandidate c;
  c.name = b.t->base->name + "/stage-two";
  c.base = b.t->base;
  c.coherent_kind = true;
  for (const Region& r : b.t->base->idx.regions)
    if (!r.is_empty()) c.regions.push_back(r);
  const BarSpace bv = b;
  c.sample = [bv](const Region& r, Rng& rng) { return elem_of(bar_sample(bv, r, rng)); };
  c.eq = [bv](const Region&, const Elem& a, const Elem& b2) {
    return approx_sim(bv, a.as<BarElement>(), b2.as<BarElement>());
  };
  c.add = [bv](const Region&, const Elem& a, const Elem& b2) {
    return elem_of(bar_add(bv, a.as<BarElement>(), b2.as<BarElement>()));
  };
  c.embed = [bv](const Region& r, const Elem& g) {
    return elem_of(b_embed(bv, r, bv.t->tembed(r, g)));
  };
  c.as_base = [bv](const Region& r, const Elem& x) -> std::optional<Elem> {
    auto u = b_image_search(bv, x.as<BarElement>());
    if (!u) return std::nullopt;
    return bv.t->at(r).embedded_value(*u);
  };
  c.deriv = [bv](const Region&, HomRef f, const Elem& x) {
    return elem_of(bar_prolong(bv, f, x.as<BarElement>()));
  };
  c.bond = [bv](const Region& to, const Region& from, HomRef f) {
    return bv.t->base->bond(to, from, f);
  };
  c.restr = [bv](const Region& to, const Region&, const Elem& x) {
    return elem_of(bar_restrict(bv, to, x.as<BarElement>()));
  };
  c.local_decompose = [](const Region&, const Elem& x, const Rational& p) {
    const CoherentFamily& fam = x.as<BarElement>().fam;
    for (std::size_t i = 0; i < fam.cover.size(); ++i)
      if (region_contains(fam.cover[i], p))
        return std::tuple<Region, HomRef, Elem>{fam.cover[i], fam.patches[i].p.label,
                                                fam.patches[i].p.rep};
    throw std::invalid_argument("point outside every cover member");
  };
  c.glue = [bv](const Region& r,
                const std::vector<std::pair<Region, Elem>>& parts) -> std::optional<Elem> {
    std::vector<BarElement> ps;
    ps.reserve(parts.size());
    for (const auto& [m, e] : parts) ps.push_back(e.as<BarElement>());
    auto g = bar_glue(bv, r, ps);
    if (!g) return std::nullopt;
    return elem_of(*g);
  };
  return c;
}

AuditReport check_full(const CandidateStructure& c, int samples, std::uint64_t seed) {
  if (const auto* g = std::get_if<SGroupCandidate>(&c))
    return check_sgroup(*g, true, samples, seed);
  return check_space(std::get<SpaceCandidate>(c), true, samples, seed);
}

AuditReport check_simplified(const CandidateStructure& c, int samples, std::uint64_t seed) {
  if (const auto* g = std::get_if<SGroupCandidate>(&c))
    return check_sgroup(*g, false, samples, seed);
  return check_space(std::get<SpaceCandidate>(c), false, samples, seed);
}

const std::vector<std::string> kMutationKinds = {
    "strictness",          "closedness",      "restriction-composition",
    "bonding-composition", "glue-uniqueness", "identity"};

CandidateStructure mutate(const CandidateStructure& cs, const std::string& kind) {
  if (std::find(kMutationKinds.begin(), kMutationKinds.end(), kind) == kMutationKinds.end())
    throw std::invalid_argument("unknown mutation kind: " + kind);

  if (const auto* g = std::get_if<SGroupCandidate>(&cs)) {
    if (kind == "restriction-composition" || kind == "bonding-composition" ||
        kind == "glue-uniqueness")
      throw std::invalid_argument(kind + " needs a region-indexed candidate");
    auto prev = std::make_shared<SGroupCandidate>(*g);
    SGroupCandidate out = *g;
    out.name = g->name + "#" + kind;
    if (kind == "strictness") {
      // Off-domain individuals keep their derivative inside the base copy.
      out.deriv = [prev](HomRef f, const Elem& x) {
        auto v = prev->as_base(x);
        if (v.has_value() && !prev->base->hom(f).in_domain(*v)) return x;
        return prev->deriv(f, x);
      };
    } else if (kind == "closedness") {
      out.decompose = [prev](const Elem&) {
        return std::pair<HomRef, Elem>{prev->base->labels.identity, prev->base->group.zero()};
      };
    } else {  // identity
      out.deriv = [](HomRef, const Elem& x) { return x; };
    }
    return out;
  }

  const SpaceCandidate& s = std::get<SpaceCandidate>(cs);
  if (kind == "glue-uniqueness" && !s.coherent_kind)
    throw std::invalid_argument(kind + " needs a locally closed candidate");
  auto prev = std::make_shared<SpaceCandidate>(s);
  SpaceCandidate out = s;
  out.name = s.name + "#" + kind;
  if (kind == "strictness") {
    out.deriv = [prev](const Region& r, HomRef f, const Elem& x) {
      auto v = prev->as_base(r, x);
      if (v.has_value() && !group_at(*prev->base, r).hom(f).in_domain(*v)) return x;
      return prev->deriv(r, f, x);
    };
  } else if (kind == "closedness") {
    if (s.coherent_kind) {
      out.local_decompose = [prev](const Region& r, const Elem&, const Rational&) {
        const SGroup& B = group_at(*prev->base, r);
        return std::tuple<Region, HomRef, Elem>{r, B.labels.identity, B.group.zero()};
      };
    } else {
      out.decompose = [prev](const Region& r, const Elem&) {
        const SGroup& B = group_at(*prev->base, r);
        return std::pair<HomRef, Elem>{B.labels.identity, B.group.zero()};
      };
    }
  } else if (kind == "identity") {
    out.deriv = [](const Region&, HomRef, const Elem& x) { return x; };
  } else if (kind == "restriction-composition") {
    // Every proper step picks up a fixed nonzero embedded shift, so two steps
    // and one step land in different classes.
    out.restr = [prev](const Region& to, const Region& from, const Elem& x) {
      Elem y = prev->restr(to, from, x);
      if (to == from || to.is_empty()) return y;
      const GroupModel& G = group_at(*prev->base, to).group;
      return prev->add(to, y, prev->embed(to, nonzero_of(G)));
    };
  } else if (kind == "bonding-composition") {
    out.bond = [prev](const Region& to, const Region& from, HomRef f) {
      HomRef b = prev->bond(to, from, f);
      if (to == from || to.is_empty()) return b;
      return group_at(*prev->base, to).labels.compose(b, b);
    };
  } else {  // glue-uniqueness
    out.glue = [prev](const Region& r, const std::vector<std::pair<Region, Elem>>& parts)
        -> std::optional<Elem> {
      auto g = prev->glue(r, parts);
      if (!g) return g;
      const GroupModel& G = group_at(*prev->base, r).group;
      return prev->add(r, *g, prev->embed(r, nonzero_of(G)));
    };
  }
  return out;
}

Elem derived_add(const SGroupCandidate& c, const Elem& x, const Elem& y) {
  const SGroup& B = *c.base;
  auto [f, g] = c.decompose(x);
  auto [p, h] = c.decompose(y);
  Elem gs = B.hom(p).preimage(g);
  Elem hs = B.hom(f).preimage(h);
  return c.deriv(B.labels.compose(f, p), c.embed(B.group.add(gs, hs)));
}

Elem derived_add(const SpaceCandidate& c, const Region& r, const Elem& x, const Elem& y) {
  const SSpace& S = *c.base;
  if (!c.coherent_kind) {
    const SGroup& B = group_at(S, r);
    auto [f, g] = c.decompose(r, x);
    auto [p, h] = c.decompose(r, y);
    Elem gs = B.hom(p).preimage(g);
    Elem hs = B.hom(f).preimage(h);
    return c.deriv(r, B.labels.compose(f, p), c.embed(r, B.group.add(gs, hs)));
  }
  // Find a cover on whose members both summands decompose, sum patchwise
  // through the decompositions, and glue the patch sums.
  for (const Cover& cov : enumerate_covers(S.idx, r)) {
    std::vector<std::pair<Region, Elem>> parts;
    bool usable = true;
    for (const Region& xi : cov) {
      Rational p = region_probe(xi);
      auto [rx, fx, gx] = c.local_decompose(r, x, p);
      auto [ry, fy, gy] = c.local_decompose(r, y, p);
      if (!subset(xi, rx) || !subset(xi, ry)) {
        usable = false;
        break;
      }
      HomRef fb = c.bond(xi, rx, fx);
      HomRef pb = c.bond(xi, ry, fy);
      Elem gb = S.restr(xi, rx, gx);
      Elem hb = S.restr(xi, ry, gy);
      const SGroup& B = group_at(S, xi);
      Elem gs = B.hom(pb).preimage(gb);
      Elem hs = B.hom(fb).preimage(hb);
      parts.emplace_back(
          xi, c.deriv(xi, B.labels.compose(fb, pb), c.embed(xi, B.group.add(gs, hs))));
    }
    if (!usable) continue;
    auto glued = c.glue(r, parts);
    if (glued) return *glued;
  }
  throw std::runtime_error("no cover admits a patchwise sum");
}

}  // namespace sgs

#include "sgs/tess.hpp"

#include <algorithm>
#include <stdexcept>
#include <typeinfo>

namespace sgs {

const ExtSGroup& TildeSpace::at(const Region& r) const {
  auto it = ext.find(r);
  if (it == ext.end()) throw std::invalid_argument("no structure at " + render_region(r));
  return it->second;
}

bool TildeSpace::tsim(const Region& r, const ExtElement& a, const ExtElement& b) const {
  return at(r).sim(a, b);
}

ExtElement TildeSpace::tzero(const Region& r) const { return at(r).zero(); }

ExtElement TildeSpace::tadd(const Region& r, const ExtElement& a, const ExtElement& b) const {
  return at(r).add(a, b);
}

ExtElement TildeSpace::tembed(const Region& r, const Elem& g) const { return at(r).embed(g); }

ExtElement TildeSpace::tprolong(const Region& r, HomRef f, const ExtElement& a) const {
  return at(r).prolong(f, a);
}

ExtElement TildeSpace::trestrict(const Region& to, const Region& from,
                                 const ExtElement& a) const {
  if (to == from) return a;
  if (!subset(to, from)) throw std::invalid_argument("restriction target not below source");
  return ExtElement{{base->bond(to, from, a.p.label), base->restr(to, from, a.p.rep)}};
}

ExtElement TildeSpace::tsample(const Region& r, Rng& rng) const { return at(r).sample(rng); }

TildeSpace build_tilde(const SSpace& s) {
  TildeSpace t;
  t.base = &s;
  for (const auto& [r, sg] : s.groups) t.ext.emplace(r, make_extension(sg));
  return t;
}

AuditReport verify_1tess(const TildeSpace& t, int samples, std::uint64_t seed) {
  const SSpace& s = *t.base;
  AuditReport rep{s.name + "/stage-one", seed, samples, {}};
  Rng rng(seed);

  std::vector<Region> live;
  for (const Region& r : s.idx.regions)
    if (!r.is_empty()) live.push_back(r);

  CheckAcc rid(rep, "restriction-identity");
  CheckAcc rcomp(rep, "restriction-composition");
  CheckAcc radd(rep, "restriction-additivity");
  CheckAcc rext(rep, "restriction-extends-base");
  CheckAcc twine(rep, "restriction-intertwine");
  CheckAcc well(rep, "restriction-representative-independence");

  for (int i = 0; i < samples; ++i) {
    for (const Region& from : live) {
      ExtElement x = t.tsample(from, rng), y = t.tsample(from, rng);
      rid.expect(t.tsim(from, t.trestrict(from, from, x), x), render_region(from));

      for (const Region& mid : live) {
        if (!subset(mid, from) || mid == from) continue;
        std::string at = render_region(mid) + "<-" + render_region(from);
        radd.expect(t.tsim(mid, t.trestrict(mid, from, t.tadd(from, x, y)),
                           t.tadd(mid, t.trestrict(mid, from, x), t.trestrict(mid, from, y))),
                    at);

        const SGroup& Gf = group_at(s, from);
        Elem g = Gf.group.sample(rng);
        rext.expect(t.tsim(mid, t.trestrict(mid, from, t.tembed(from, g)),
                           t.tembed(mid, s.restr(mid, from, g))),
                    at);

        HomRef f = Gf.labels.sample(rng);
        twine.expect(t.tsim(mid, t.trestrict(mid, from, t.tprolong(from, f, x)),
                            t.tprolong(mid, s.bond(mid, from, f), t.trestrict(mid, from, x))),
                    at + ", " + Gf.labels.render(f));

        ExtElement x2 = t.at(from).perturb_rep(t.at(from).raise(x), rng);
        well.expect(t.tsim(mid, t.trestrict(mid, from, x), t.trestrict(mid, from, x2)), at);

        for (const Region& low : live) {
          if (!subset(low, mid) || low == mid) continue;
          rcomp.expect(t.tsim(low, t.trestrict(low, mid, t.trestrict(mid, from, x)),
                              t.trestrict(low, from, x)),
                       render_region(low) + "<-" + at);
        }
      }
    }
  }

  // Transport conditions per region pair, via the generic lift audit.
  CheckAcc lifts(rep, "lift-conditions");
  for (const Region& from : live)
    for (const Region& to : live) {
      if (!subset(to, from) || to == from) continue;
      LiftSpec spec{&group_at(s, from), &group_at(s, to),
                    [&s, to, from](const Elem& g) { return s.restr(to, from, g); },
                    [&s, to, from](HomRef f) { return s.bond(to, from, f); }};
      AuditReport lr = audit_lift(spec, t.at(from), t.at(to), std::max(8, samples / 8), seed);
      lifts.expect(lr.accepted(), render_region(to) + "<-" + render_region(from));
    }

  return rep;
}

BarSpace build_bar(const TildeSpace& t) { return BarSpace{&t}; }

bool bar_coherent(const BarSpace& bs, const CoherentFamily& fam) {
  const TildeSpace& t = *bs.t;
  if (!covers(fam.gamma, fam.cover) || fam.cover.size() != fam.patches.size()) return false;
  for (std::size_t i = 0; i < fam.cover.size(); ++i)
    for (std::size_t j = i + 1; j < fam.cover.size(); ++j) {
      Region m = intersect(fam.cover[i], fam.cover[j]);
      if (m.is_empty()) continue;
      if (!t.tsim(m, t.trestrict(m, fam.cover[i], fam.patches[i]),
                  t.trestrict(m, fam.cover[j], fam.patches[j])))
        return false;
    }
  return true;
}

bool approx_sim(const BarSpace& bs, const BarElement& a, const BarElement& b) {
  if (!(a.fam.gamma == b.fam.gamma))
    throw std::invalid_argument("comparing elements over different regions");
  const TildeSpace& t = *bs.t;
  for (std::size_t i = 0; i < a.fam.cover.size(); ++i)
    for (std::size_t j = 0; j < b.fam.cover.size(); ++j) {
      Region m = intersect(a.fam.cover[i], b.fam.cover[j]);
      if (m.is_empty()) continue;
      if (!t.tsim(m, t.trestrict(m, a.fam.cover[i], a.fam.patches[i]),
                  t.trestrict(m, b.fam.cover[j], b.fam.patches[j])))
        return false;
    }
  return true;
}

BarElement bar_add(const BarSpace& bs, const BarElement& a, const BarElement& b) {
  if (!(a.fam.gamma == b.fam.gamma))
    throw std::invalid_argument("adding elements over different regions");
  const TildeSpace& t = *bs.t;
  CoherentFamily out;
  out.gamma = a.fam.gamma;
  for (std::size_t i = 0; i < a.fam.cover.size(); ++i)
    for (std::size_t j = 0; j < b.fam.cover.size(); ++j) {
      Region m = intersect(a.fam.cover[i], b.fam.cover[j]);
      if (m.is_empty()) continue;
      out.cover.push_back(m);
      out.patches.push_back(t.tadd(m, t.trestrict(m, a.fam.cover[i], a.fam.patches[i]),
                                   t.trestrict(m, b.fam.cover[j], b.fam.patches[j])));
    }
  return {out};
}

BarElement bar_negate(const BarSpace& bs, const BarElement& a) {
  const TildeSpace& t = *bs.t;
  BarElement out = a;
  for (std::size_t i = 0; i < out.fam.cover.size(); ++i)
    out.fam.patches[i] = t.at(out.fam.cover[i]).negate(out.fam.patches[i]);
  return out;
}

BarElement bar_zero(const BarSpace& bs, const Region& r) {
  return b_embed(bs, r, bs.t->tzero(r));
}

BarElement b_embed(const BarSpace&, const Region& r, const ExtElement& x) {
  return {{r, {r}, {x}}};
}

BarElement bar_prolong(const BarSpace& bs, HomRef f, const BarElement& a) {
  const TildeSpace& t = *bs.t;
  BarElement out = a;
  for (std::size_t i = 0; i < out.fam.cover.size(); ++i)
    out.fam.patches[i] = t.tprolong(out.fam.cover[i],
                                    t.base->bond(out.fam.cover[i], a.fam.gamma, f),
                                    out.fam.patches[i]);
  return out;
}

BarElement bar_restrict(const BarSpace& bs, const Region& to, const BarElement& a) {
  if (!subset(to, a.fam.gamma)) throw std::invalid_argument("restriction target not below");
  const TildeSpace& t = *bs.t;
  CoherentFamily out;
  out.gamma = to;
  for (std::size_t i = 0; i < a.fam.cover.size(); ++i) {
    Region m = intersect(a.fam.cover[i], to);
    if (m.is_empty()) continue;
    out.cover.push_back(m);
    out.patches.push_back(t.trestrict(m, a.fam.cover[i], a.fam.patches[i]));
  }
  return {out};
}

std::optional<BarElement> bar_glue(const BarSpace& bs, const Region& gamma,
                                   const std::vector<BarElement>& parts) {
  Cover regions;
  for (const BarElement& p : parts) regions.push_back(p.fam.gamma);
  if (!covers(gamma, regions)) return std::nullopt;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      Region m = intersect(parts[i].fam.gamma, parts[j].fam.gamma);
      if (m.is_empty()) continue;
      if (!approx_sim(bs, bar_restrict(bs, m, parts[i]), bar_restrict(bs, m, parts[j])))
        return std::nullopt;
    }
  CoherentFamily out;
  out.gamma = gamma;
  for (const BarElement& p : parts) {
    out.cover.insert(out.cover.end(), p.fam.cover.begin(), p.fam.cover.end());
    out.patches.insert(out.patches.end(), p.fam.patches.begin(), p.fam.patches.end());
  }
  if (!bar_coherent(bs, out)) return std::nullopt;
  return BarElement{out};
}

BarElement bar_sample(const BarSpace& bs, const Region& r, Rng& rng) {
  const TildeSpace& t = *bs.t;
  auto cs = enumerate_covers(t.base->idx, r);
  ExtElement g = t.tsample(r, rng);
  if (cs.empty()) return b_embed(bs, r, g);
  const Cover& c =
      cs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(cs.size()) - 1))];
  CoherentFamily fam;
  fam.gamma = r;
  fam.cover = c;
  for (const Region& m : c) {
    ExtElement patch = t.trestrict(m, r, g);
    // Vary representatives so families are not literal restriction tuples.
    if (coin(rng)) patch = t.at(m).raise(patch);
    if (coin(rng)) patch = t.at(m).perturb_rep(patch, rng);
    fam.patches.push_back(patch);
  }
  return {fam};
}

std::optional<ExtElement> merge_pp_patches(const Region& gamma, const Cover& cover,
                                           const std::vector<ExtElement>& patches) {
  if (cover.size() != patches.size() || cover.empty()) return std::nullopt;
  if (!covers(gamma, cover)) return std::nullopt;
  if (cover.size() == 1 && cover[0] == gamma) return patches[0];

  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i].kind != Region::Kind::interval) return std::nullopt;
    if (!patches[i].p.rep.v.has_value() || patches[i].p.rep.v.type() != typeid(PPFunction))
      return std::nullopt;
  }
  std::uint64_t order = 0;
  for (const ExtElement& p : patches) order = std::max(order, p.p.label.id);
  int n = static_cast<int>(order);

  std::vector<std::pair<Interval, PPFunction>> raised;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const ExtElement& p = patches[i];
    PPFunction f =
        pp_antiderivative_n(p.p.rep.as<PPFunction>(), n - static_cast<int>(p.p.label.id));
    raised.emplace_back(cover[i].iv, f);
  }
  std::sort(raised.begin(), raised.end(),
            [](const auto& x, const auto& y) { return x.first.lo < y.first.lo; });

  Interval accreg = raised[0].first;
  PPFunction acc = raised[0].second;
  for (std::size_t j = 1; j < raised.size(); ++j) {
    const auto& [iv, f] = raised[j];
    Interval overlap{iv.lo, std::min(accreg.hi, iv.hi)};
    if (!overlap.valid()) return std::nullopt;
    PPFunction diff = pp_sub(pp_restrict(acc, overlap), pp_restrict(f, overlap));
    if (!pp_is_poly_deg_lt(diff, n)) return std::nullopt;
    if (iv.hi <= accreg.hi) continue;  // contained patch, agreement was all it owed
    PPFunction adj = pp_add(f, pp_from_poly(iv, diff.pieces[0]));
    auto merged = pp_merge({accreg.lo, iv.hi}, {{accreg, acc}, {iv, adj}});
    if (!merged) return std::nullopt;
    accreg = {accreg.lo, iv.hi};
    acc = std::move(*merged);
  }
  if (!(Region::of(accreg) == gamma)) return std::nullopt;
  return ExtElement{{HomRef{order}, elem_of(acc)}};
}

std::optional<ExtElement> b_image_search(const BarSpace& bs, const BarElement& a) {
  const CoherentFamily& fam = a.fam;
  if (fam.cover.size() == 1 && fam.cover[0] == fam.gamma) return fam.patches[0];
  auto merged = merge_pp_patches(fam.gamma, fam.cover, fam.patches);
  if (!merged) return std::nullopt;
  if (!approx_sim(bs, b_embed(bs, fam.gamma, *merged), a)) return std::nullopt;
  return merged;
}

AuditReport verify_2tess(const BarSpace& bs, int samples, std::uint64_t seed) {
  const TildeSpace& t = *bs.t;
  const SSpace& s = *t.base;
  AuditReport rep{s.name + "/stage-two", seed, samples, {}};
  Rng rng(seed);

  std::vector<Region> live;
  for (const Region& r : s.idx.regions)
    if (!r.is_empty()) live.push_back(r);

  CheckAcc equiv(rep, "agreement-equivalence");
  CheckAcc kernel(rep, "agreement-representative-independence");
  CheckAcc glaws(rep, "group-laws");
  CheckAcc bemb(rep, "embedding-hom-injective");
  CheckAcc bcov(rep, "embedding-cover-independent");
  CheckAcc rlaws(rep, "restriction-laws");
  CheckAcc rtwine(rep, "restriction-intertwine");
  CheckAcc glue_rt(rep, "glue-roundtrip");
  CheckAcc glue_rej(rep, "glue-rejects-disagreement");
  CheckAcc localc(rep, "local-closedness");
  CheckAcc psemi(rep, "prolongation-semigroup");

  for (int i = 0; i < samples; ++i) {
    const Region& r = live[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(live.size()) - 1))];
    const SGroup& G = group_at(s, r);
    std::string at = render_region(r);

    BarElement x = bar_sample(bs, r, rng);
    BarElement y = bar_sample(bs, r, rng);
    BarElement z = bar_sample(bs, r, rng);

    // Re-present x over other covers through neutral operations.
    BarElement x2 = bar_add(bs, x, bar_zero(bs, r));
    BarElement x3 = bar_restrict(bs, r, bar_add(bs, x2, bar_zero(bs, r)));
    equiv.expect(approx_sim(bs, x, x) && approx_sim(bs, x, x2) && approx_sim(bs, x2, x) &&
                     approx_sim(bs, x2, x3) && approx_sim(bs, x, x3),
                 at);

    BarElement xk = x;
    for (std::size_t pi = 0; pi < xk.fam.patches.size(); ++pi)
      xk.fam.patches[pi] = t.at(xk.fam.cover[pi]).perturb_rep(xk.fam.patches[pi], rng);
    kernel.expect(approx_sim(bs, x, xk), at);

    glaws.expect(
        approx_sim(bs, bar_add(bs, bar_add(bs, x, y), z), bar_add(bs, x, bar_add(bs, y, z))) &&
            approx_sim(bs, bar_add(bs, x, y), bar_add(bs, y, x)) &&
            approx_sim(bs, bar_add(bs, x, bar_zero(bs, r)), x) &&
            approx_sim(bs, bar_add(bs, x, bar_negate(bs, x)), bar_zero(bs, r)),
        at);

    ExtElement u = t.tsample(r, rng), v = t.tsample(r, rng);
    bemb.expect(approx_sim(bs, b_embed(bs, r, t.tadd(r, u, v)),
                           bar_add(bs, b_embed(bs, r, u), b_embed(bs, r, v))) &&
                    approx_sim(bs, b_embed(bs, r, u), b_embed(bs, r, v)) == t.tsim(r, u, v),
                at);

    auto cs = enumerate_covers(s.idx, r);
    const Cover& c = cs[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(cs.size()) - 1))];
    {
      CoherentFamily viaCover{r, c, {}};
      for (const Region& m : c) viaCover.patches.push_back(t.trestrict(m, r, u));
      bcov.expect(approx_sim(bs, b_embed(bs, r, u), BarElement{viaCover}), at);
    }

    // Restriction laws along an indexed chain below r.
    for (const Region& mid : live) {
      if (!subset(mid, r) || mid == r) continue;
      std::string at2 = render_region(mid) + "<-" + at;
      rlaws.expect(approx_sim(bs, bar_restrict(bs, r, x), x) &&
                       approx_sim(bs, bar_restrict(bs, mid, bar_add(bs, x, y)),
                                  bar_add(bs, bar_restrict(bs, mid, x),
                                          bar_restrict(bs, mid, y))),
                   at2);
      for (const Region& low : live) {
        if (!subset(low, mid) || low == mid) continue;
        rlaws.expect(approx_sim(bs, bar_restrict(bs, low, bar_restrict(bs, mid, x)),
                                bar_restrict(bs, low, x)),
                     render_region(low) + "<-" + at2);
      }
      HomRef f = G.labels.sample(rng);
      rtwine.expect(approx_sim(bs, bar_restrict(bs, mid, bar_prolong(bs, f, x)),
                               bar_prolong(bs, s.bond(mid, r, f), bar_restrict(bs, mid, x))),
                    at2 + ", " + G.labels.render(f));
    }

    // Glue the restrictions of x onto a cover back together.
    {
      std::vector<BarElement> parts;
      for (const Region& m : c) parts.push_back(bar_restrict(bs, m, x));
      auto back = bar_glue(bs, r, parts);
      glue_rt.expect(back.has_value() && approx_sim(bs, *back, x), at);

      if (c.size() > 1) {
        std::vector<BarElement> broken = parts;
        // Knock one part off its class by a nonzero embedded shift.
        const Region& m0 = broken[0].fam.gamma;
        Elem shift = group_at(s, m0).group.sample(rng);
        while (group_at(s, m0).group.eq(shift, group_at(s, m0).group.zero()))
          shift = group_at(s, m0).group.sample(rng);
        broken[0] = bar_add(bs, broken[0], b_embed(bs, m0, t.tembed(m0, shift)));
        glue_rej.expect(!bar_glue(bs, r, broken).has_value(),
                        at + " shifted by " + group_at(s, m0).group.render(shift));
      }
    }

    // Every member of the defining cover witnesses local closedness.
    for (std::size_t pi = 0; pi < x.fam.cover.size(); ++pi) {
      const Region& m = x.fam.cover[pi];
      localc.expect(region_contains(r, sample_point(m, rng)) &&
                        approx_sim(bs, bar_restrict(bs, m, x),
                                   b_embed(bs, m, x.fam.patches[pi])),
                    at + " patch " + render_region(m));
    }

    HomRef f = G.labels.sample(rng), g = G.labels.sample(rng);
    psemi.expect(
        approx_sim(bs, bar_prolong(bs, f, bar_prolong(bs, g, x)),
                   bar_prolong(bs, G.labels.compose(f, g), x)) &&
            approx_sim(bs, bar_prolong(bs, G.labels.identity, x), x),
        at + ", " + G.labels.render(f) + "," + G.labels.render(g));
  }
  return rep;
}

}  // namespace sgs

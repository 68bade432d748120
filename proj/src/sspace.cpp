#include "sgs/sspace.hpp"

#include "sgs/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgs {

AuditReport indexer_validate(const Indexer& idx) {
  AuditReport rep{"indexer", 0, 0, {}};
  CheckAcc finite(rep, "indexer-finite-nonempty");
  CheckAcc top(rep, "indexer-contains-top");
  CheckAcc within(rep, "indexer-regions-in-top");
  CheckAcc meet(rep, "indexer-intersection-closed");
  CheckAcc uniq(rep, "indexer-no-duplicates");

  finite.expect(!idx.regions.empty(), "no regions");
  top.expect(indexer_contains(idx, idx.top), render_region(idx.top));
  for (std::size_t i = 0; i < idx.regions.size(); ++i) {
    const Region& a = idx.regions[i];
    within.expect(subset(a, idx.top), render_region(a));
    for (std::size_t j = i + 1; j < idx.regions.size(); ++j) {
      uniq.expect(!(a == idx.regions[j]), render_region(a));
      Region m = intersect(a, idx.regions[j]);
      meet.expect(indexer_contains(idx, m),
                  render_region(a) + " ^ " + render_region(idx.regions[j]));
    }
  }
  return rep;
}

bool indexer_contains(const Indexer& idx, const Region& r) {
  return std::any_of(idx.regions.begin(), idx.regions.end(),
                     [&](const Region& x) { return x == r; });
}

std::vector<Region> subregions(const Indexer& idx, const Region& gamma) {
  std::vector<Region> out;
  for (const Region& r : idx.regions)
    if (subset(r, gamma)) out.push_back(r);
  return out;
}

std::vector<Cover> enumerate_covers(const Indexer& idx, const Region& gamma) {
  std::vector<Region> pool;
  for (const Region& r : subregions(idx, gamma))
    if (!r.is_empty()) pool.push_back(r);
  std::vector<Cover> out;
  for (std::uint64_t mask = 1; mask < (1ull << pool.size()); ++mask) {
    Cover c;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1ull << i)) c.push_back(pool[i]);
    if (covers(gamma, c)) out.push_back(std::move(c));
  }
  return out;
}

const SGroup& group_at(const SSpace& s, const Region& r) {
  auto it = s.groups.find(r);
  if (it == s.groups.end())
    throw std::invalid_argument("no group at region " + render_region(r));
  return it->second;
}

bool coherent_check(const SSpace& s, const Region& gamma, const Cover& cover,
                    const std::vector<Elem>& patches) {
  if (!covers(gamma, cover) || cover.size() != patches.size()) return false;
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      Region m = intersect(cover[i], cover[j]);
      if (m.is_empty()) continue;
      Elem a = s.restr(m, cover[i], patches[i]);
      Elem b = s.restr(m, cover[j], patches[j]);
      if (!group_at(s, m).group.eq(a, b)) return false;
    }
  return true;
}

std::optional<Elem> glue(const SSpace& s, const Region& gamma, const Cover& cover,
                         const std::vector<Elem>& patches) {
  if (!coherent_check(s, gamma, cover, patches)) return std::nullopt;
  if (!s.glue_native) return std::nullopt;
  auto g = s.glue_native(gamma, cover, patches);
  if (!g) return std::nullopt;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (!group_at(s, cover[i]).group.eq(s.restr(cover[i], gamma, *g), patches[i]))
      return std::nullopt;
  return g;
}

AuditReport sspace_validate(const SSpace& s, int samples, std::uint64_t seed) {
  AuditReport rep{s.name + "/family", seed, samples, {}};
  Rng rng(seed);

  {
    AuditReport idx = indexer_validate(s.idx);
    CheckAcc shape(rep, "indexer-shape");
    shape.expect(idx.accepted(), "indexer laws");
  }

  std::vector<Region> live;
  for (const Region& r : s.idx.regions)
    if (!r.is_empty()) live.push_back(r);

  CheckAcc rid(rep, "restriction-identity");
  CheckAcc rcomp(rep, "restriction-composition");
  CheckAcc radd(rep, "restriction-additivity");
  CheckAcc bid(rep, "bonding-identity");
  CheckAcc bcomp(rep, "bonding-composition");
  CheckAcc bhom(rep, "bonding-semigroup-hom");
  CheckAcc twine(rep, "restriction-intertwine");
  CheckAcc local(rep, "restriction-locality");

  for (int i = 0; i < samples; ++i) {
    for (const Region& from : live) {
      const SGroup& Gf = group_at(s, from);
      Elem g = Gf.group.sample(rng);
      rid.expect(Gf.group.eq(s.restr(from, from, g), g), render_region(from));
      HomRef probe = Gf.labels.sample(rng);
      bid.expect(Gf.labels.equal(s.bond(from, from, probe), probe),
                 render_region(from) + ", " + Gf.labels.render(probe));

      for (const Region& mid : live) {
        if (!subset(mid, from) || mid == from) continue;
        const SGroup& Gm = group_at(s, mid);
        Elem h = Gf.group.sample(rng);
        radd.expect(Gm.group.eq(s.restr(mid, from, Gf.group.add(g, h)),
                                Gm.group.add(s.restr(mid, from, g), s.restr(mid, from, h))),
                    render_region(mid) + "<-" + render_region(from));

        HomRef a = Gf.labels.sample(rng), b = Gf.labels.sample(rng);
        bhom.expect(Gm.labels.equal(s.bond(mid, from, Gf.labels.compose(a, b)),
                                    Gm.labels.compose(s.bond(mid, from, a), s.bond(mid, from, b))),
                    render_region(mid) + "<-" + render_region(from));

        // Restriction commutes with the transported map on domain elements.
        HomOracle of = Gf.hom(a);
        Elem u = of.preimage(Gf.group.sample(rng));
        HomOracle om = Gm.hom(s.bond(mid, from, a));
        Elem ru = s.restr(mid, from, u);
        twine.expect(om.in_domain(ru) &&
                         Gm.group.eq(s.restr(mid, from, of.apply(u)), om.apply(ru)),
                     render_region(mid) + "<-" + render_region(from) + ", " + Gf.labels.render(a));

        for (const Region& low : live) {
          if (!subset(low, mid) || low == mid) continue;
          const SGroup& Gl = group_at(s, low);
          rcomp.expect(Gl.group.eq(s.restr(low, mid, s.restr(mid, from, g)),
                                   s.restr(low, from, g)),
                       render_region(low) + "<-" + render_region(mid) + "<-" +
                           render_region(from));
          bcomp.expect(Gl.labels.equal(s.bond(low, mid, s.bond(mid, from, a)),
                                       s.bond(low, from, a)),
                       render_region(low) + "<-" + render_region(mid));
        }
      }

      // Locality on constructed instances: an element is pinned down by its
      // restrictions to any cover, witnessed through the native glue.
      if (s.glue_native) {
        auto cs = enumerate_covers(s.idx, from);
        if (!cs.empty()) {
          const Cover& c = cs[static_cast<std::size_t>(uniform_int(
              rng, 0, static_cast<std::int64_t>(cs.size()) - 1))];
          std::vector<Elem> patches;
          for (const Region& r : c) patches.push_back(s.restr(r, from, g));
          auto back = glue(s, from, c, patches);
          local.expect(back && Gf.group.eq(*back, g), render_region(from));
        }
      }
    }
  }
  return rep;
}

SSpace generated_sspace(const SGroup& sg) {
  SSpace s;
  s.name = sg.name + "/generated";
  s.idx.top = Region::whole();
  s.idx.regions = {Region::whole(), Region::empty()};
  s.groups.emplace(Region::whole(), sg);
  s.groups.emplace(Region::empty(), make_zero_sgroup());
  s.bond = [](const Region& to, const Region&, HomRef f) {
    return to.is_empty() ? HomRef{0} : f;
  };
  SGroup zero = make_zero_sgroup();
  s.restr = [zero](const Region& to, const Region&, const Elem& g) {
    return to.is_empty() ? zero.group.zero() : g;
  };
  s.glue_native = [](const Region&, const Cover&, const std::vector<Elem>& patches) {
    return std::optional<Elem>(patches.at(0));
  };
  return s;
}

SSpace subspace(const SSpace& s, const Region& top) {
  if (!indexer_contains(s.idx, top)) throw std::invalid_argument("subspace top not indexed");
  SSpace out = s;
  out.name = s.name + "/sub" + render_region(top);
  out.idx.top = top;
  out.idx.regions = subregions(s.idx, top);
  out.groups.clear();
  for (const Region& r : out.idx.regions) out.groups.emplace(r, group_at(s, r));
  return out;
}

SSpace make_pp_fixture_sspace() {
  auto iv = [](std::int64_t a, std::int64_t b) {
    return Interval{rational_of(a), rational_of(b)};
  };
  SSpace s;
  s.name = "pp-fixture";
  s.idx.top = Region::of(iv(0, 3));
  s.idx.regions = {Region::of(iv(0, 3)), Region::of(iv(0, 2)), Region::of(iv(1, 3)),
                   Region::of(iv(1, 2)), Region::empty()};
  for (const Region& r : s.idx.regions)
    s.groups.emplace(r, r.is_empty() ? make_zero_sgroup() : make_pp_sgroup(r.iv));
  s.bond = [](const Region& to, const Region&, HomRef f) {
    return to.is_empty() ? HomRef{0} : f;
  };
  s.restr = [](const Region& to, const Region& from, const Elem& g) {
    if (to.is_empty()) return elem_of(Int(0));
    if (!subset(to, from)) throw std::invalid_argument("restriction target not below source");
    return elem_of(pp_restrict(g.as<PPFunction>(), to.iv));
  };
  s.glue_native = [](const Region& gamma, const Cover& cover,
                     const std::vector<Elem>& patches) -> std::optional<Elem> {
    std::vector<std::pair<Interval, PPFunction>> ps;
    for (std::size_t i = 0; i < cover.size(); ++i)
      if (!cover[i].is_empty()) ps.emplace_back(cover[i].iv, patches[i].as<PPFunction>());
    auto m = pp_merge(gamma.iv, ps);
    if (!m) return std::nullopt;
    return elem_of(*m);
  };
  return s;
}

SpaceView view_of(const SSpace& s) {
  SpaceView v;
  v.name = s.name;
  v.idx = s.idx;
  v.labels = group_at(s, s.idx.top).labels;
  v.sample = [&s](const Region& r, Rng& rng) { return group_at(s, r).group.sample(rng); };
  v.domain_sample = [&s](const Region& r, HomRef f, Rng& rng) {
    const SGroup& g = group_at(s, r);
    return g.hom(f).preimage(g.group.sample(rng));
  };
  v.eq = [&s](const Region& r, const Elem& a, const Elem& b) {
    return group_at(s, r).group.eq(a, b);
  };
  v.add = [&s](const Region& r, const Elem& a, const Elem& b) {
    return group_at(s, r).group.add(a, b);
  };
  v.deriv = [&s](const Region& r, HomRef f, const Elem& a) {
    return group_at(s, r).hom(f).apply(a);
  };
  v.restr = s.restr;
  return v;
}

AuditReport iso_check(const SpaceView& a, const SpaceView& b, const IsoWitness& w, int samples,
                      std::uint64_t seed) {
  AuditReport rep{a.name + "~" + b.name + "/iso", seed, samples, {}};
  Rng rng(seed);

  CheckAcc bij(rep, "iso-bijective");
  CheckAcc addv(rep, "iso-additive");
  CheckAcc der(rep, "iso-derivative-compatible");
  CheckAcc res(rep, "iso-restriction-compatible");

  std::vector<Region> live;
  for (const Region& r : a.idx.regions)
    if (!r.is_empty()) live.push_back(r);

  for (int i = 0; i < samples; ++i) {
    for (const Region& r : live) {
      Elem x = a.sample(r, rng), y = a.sample(r, rng);
      Elem z = b.sample(r, rng);
      std::string at = render_region(r);
      bij.expect(a.eq(r, w.inv(r, w.fwd(r, x)), x) && b.eq(r, w.fwd(r, w.inv(r, z)), z), at);
      addv.expect(b.eq(r, w.fwd(r, a.add(r, x, y)), b.add(r, w.fwd(r, x), w.fwd(r, y))), at);

      HomRef f = a.labels.sample(rng);
      Elem u = a.domain_sample(r, f, rng);
      der.expect(b.eq(r, w.fwd(r, a.deriv(r, f, u)), b.deriv(r, w.label_fwd(f), w.fwd(r, u))),
                 at + ", " + a.labels.render(f));

      for (const Region& to : live) {
        if (!subset(to, r) || to == r) continue;
        res.expect(b.eq(to, w.fwd(to, a.restr(to, r, x)), b.restr(to, r, w.fwd(r, x))),
                   render_region(to) + "<-" + at);
      }
    }
  }
  return rep;
}

}  // namespace sgs

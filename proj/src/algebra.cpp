#include "sgs/algebra.hpp"

namespace sgs {

namespace {

std::string note2(const SGroup& sg, const char* what, const Elem& a, const Elem& b) {
  return std::string(what) + ": " + sg.group.render(a) + ", " + sg.group.render(b);
}

}  // namespace

AuditReport audit_sgroup(const SGroup& sg, int samples, std::uint64_t seed) {
  AuditReport rep{sg.name + "/structure", seed, samples, {}};
  Rng rng(seed);
  const GroupModel& G = sg.group;

  {
    CheckAcc assoc(rep, "group-associativity");
    CheckAcc comm(rep, "group-commutativity");
    CheckAcc neut(rep, "group-neutral");
    CheckAcc inv(rep, "group-inverse");
    for (int i = 0; i < samples; ++i) {
      Elem a = G.sample(rng), b = G.sample(rng), c = G.sample(rng);
      assoc.expect(G.eq(G.add(G.add(a, b), c), G.add(a, G.add(b, c))),
                   note2(sg, "a,b", a, b) + ", c=" + G.render(c));
      if (sg.abelian) comm.expect(G.eq(G.add(a, b), G.add(b, a)), note2(sg, "a,b", a, b));
      neut.expect(G.eq(G.add(a, G.zero()), a), "a=" + G.render(a));
      inv.expect(G.eq(G.add(a, G.negate(a)), G.zero()), "a=" + G.render(a));
    }
  }

  {
    CheckAcc ident(rep, "labels-identity");
    CheckAcc assoc(rep, "labels-associativity");
    CheckAcc comm(rep, "labels-commutativity");
    for (int i = 0; i < samples; ++i) {
      HomRef a = sg.labels.sample(rng), b = sg.labels.sample(rng), c = sg.labels.sample(rng);
      ident.expect(sg.labels.equal(sg.labels.compose(a, sg.labels.identity), a) &&
                       sg.labels.equal(sg.labels.compose(sg.labels.identity, a), a),
                   sg.labels.render(a));
      assoc.expect(sg.labels.equal(sg.labels.compose(sg.labels.compose(a, b), c),
                                   sg.labels.compose(a, sg.labels.compose(b, c))),
                   sg.labels.render(a) + "," + sg.labels.render(b) + "," + sg.labels.render(c));
      if (sg.abelian)
        comm.expect(sg.labels.equal(sg.labels.compose(a, b), sg.labels.compose(b, a)),
                    sg.labels.render(a) + "," + sg.labels.render(b));
    }
  }

  {
    CheckAcc dom(rep, "hom-domain-subgroup");
    CheckAcc addv(rep, "hom-additivity");
    CheckAcc wit(rep, "hom-preimage-witness");
    CheckAcc ker(rep, "hom-kernel");
    CheckAcc idl(rep, "hom-identity-label");
    for (int i = 0; i < samples; ++i) {
      HomRef f = sg.labels.sample(rng);
      HomOracle o = sg.hom(f);
      Elem g = G.sample(rng), h = G.sample(rng);
      Elem u = o.preimage(g), w = o.preimage(h);
      std::string at = sg.labels.render(f) + ", g=" + G.render(g);

      wit.expect(o.in_domain(u) && G.eq(o.apply(u), g), at);
      dom.expect(o.in_domain(G.zero()) && o.in_domain(G.add(u, w)) && o.in_domain(G.negate(u)),
                 at);
      addv.expect(G.eq(o.apply(G.add(u, w)), G.add(o.apply(u), o.apply(w))), at);

      Elem k = o.kernel_sample(rng);
      ker.expect(o.in_kernel(k) && o.in_domain(k) && G.eq(o.apply(k), G.zero()),
                 at + ", k=" + G.render(k));
      ker.expect(o.in_kernel(u) == (o.in_domain(u) && G.eq(o.apply(u), G.zero())), at);

      HomOracle id = sg.hom(sg.labels.identity);
      idl.expect(id.in_domain(g) && G.eq(id.apply(g), g), "g=" + G.render(g));
    }
  }

  {
    CheckAcc cdom(rep, "compose-domain");
    CheckAcc capp(rep, "compose-apply");
    CheckAcc ccomm(rep, "compose-commutes");
    for (int i = 0; i < samples; ++i) {
      HomRef a = sg.labels.sample(rng), b = sg.labels.sample(rng);
      HomRef ab = compose(sg, a, b);
      HomOracle oa = sg.hom(a), ob = sg.hom(b), oab = sg.hom(ab);
      // Probe with a guaranteed composite-domain element plus raw samples.
      Elem probes[3] = {ob.preimage(oa.preimage(G.sample(rng))), G.sample(rng),
                        ob.kernel_sample(rng)};
      for (const Elem& x : probes) {
        bool stepwise = ob.in_domain(x) && oa.in_domain(ob.apply(x));
        std::string at = sg.labels.render(ab) + ", x=" + G.render(x);
        cdom.expect(oab.in_domain(x) == stepwise, at);
        if (stepwise) capp.expect(G.eq(oab.apply(x), oa.apply(ob.apply(x))), at);
      }
      if (sg.abelian)
        ccomm.expect(sg.labels.equal(ab, compose(sg, b, a)),
                     sg.labels.render(a) + "," + sg.labels.render(b));
    }
  }

  return rep;
}

AuditReport transfer_suite(const SGroup& sg, int samples, std::uint64_t seed) {
  AuditReport rep{sg.name + "/coset-laws", seed, samples, {}};
  Rng rng(seed);
  const GroupModel& G = sg.group;
  auto pm = [&](const Elem& a, const Elem& b, bool plus) {
    return plus ? G.add(a, b) : sub(G, a, b);
  };

  CheckAcc law_a(rep, "sum-monotonicity");
  CheckAcc law_b(rep, "preimage-monotonicity");
  CheckAcc law_c(rep, "preimage-composition");
  CheckAcc law_d(rep, "preimage-sum-lower");
  CheckAcc law_e(rep, "preimage-sum-upper");
  CheckAcc law_f(rep, "kernel-composite-decomposition");
  CheckAcc law_g(rep, "kernel-absorbs-factors");
  CheckAcc law_h(rep, "image-kernel-transfer");

  for (int i = 0; i < samples; ++i) {
    HomRef rPhi = sg.labels.sample(rng), rPsi = sg.labels.sample(rng),
           rphi = sg.labels.sample(rng);
    HomRef rPhiPsi = compose(sg, rPhi, rPsi);
    HomOracle Phi = sg.hom(rPhi), Psi = sg.hom(rPsi), phi = sg.hom(rphi),
              PhiPsi = sg.hom(rPhiPsi);
    Elem g = G.sample(rng), h = G.sample(rng);
    bool plus = coin(rng);
    std::string at = sg.labels.render(rPhi) + "," + sg.labels.render(rPsi) +
                     ", g=" + G.render(g) + ", h=" + G.render(h) + (plus ? ", +" : ", -");

    // Coset sums: x0+N(Psi) within x0+N(PhiPsi), y0+N(Phi) within y0+N(PhiPsi);
    // a sampled sum must land in the sum coset, whose membership is decidable.
    {
      Elem x0 = G.sample(rng), y0 = G.sample(rng);
      Elem f = G.add(x0, Psi.kernel_sample(rng)), l = G.add(y0, Phi.kernel_sample(rng));
      law_a.expect(PhiPsi.in_kernel(sub(G, pm(f, l, plus), pm(x0, y0, plus))), at);
    }

    // Monotonicity of preimage: members over a point of g+N(Psi) stay members
    // over the whole coset.
    {
      Elem x = G.add(Phi.preimage(G.add(g, Psi.kernel_sample(rng))), Phi.kernel_sample(rng));
      law_b.expect(Phi.in_domain(x) && Psi.in_kernel(sub(G, Phi.apply(x), g)), at);
    }

    // Preimage of a composite, both inclusion directions.
    {
      Elem x = G.add(PhiPsi.preimage(g), PhiPsi.kernel_sample(rng));
      bool fwd = Psi.in_domain(x) && Phi.in_domain(Psi.apply(x)) &&
                 G.eq(Phi.apply(Psi.apply(x)), g);
      Elem y = G.add(Psi.preimage(G.add(Phi.preimage(g), Phi.kernel_sample(rng))),
                     Psi.kernel_sample(rng));
      bool bwd = PhiPsi.in_domain(y) && G.eq(PhiPsi.apply(y), g);
      law_c.expect(fwd && bwd, at);
    }

    // Sum of preimages maps into the preimage of the summed cosets; the image
    // of each summand is its own membership witness.
    {
      Elem u = G.add(phi.preimage(G.add(Psi.preimage(g), Psi.kernel_sample(rng))),
                     phi.kernel_sample(rng));
      Elem v = G.add(phi.preimage(G.add(Phi.preimage(h), Phi.kernel_sample(rng))),
                     phi.kernel_sample(rng));
      Elem s = pm(u, v, plus);
      bool ok = phi.in_domain(s) && G.eq(phi.apply(s), pm(phi.apply(u), phi.apply(v), plus));
      ok = ok && Psi.in_domain(phi.apply(u)) && G.eq(Psi.apply(phi.apply(u)), g);
      ok = ok && Phi.in_domain(phi.apply(v)) && G.eq(Phi.apply(phi.apply(v)), h);
      law_d.expect(ok, at + ", " + sg.labels.render(rphi));
    }

    // Reverse direction: a preimage of a summed coset splits into preimages of
    // the parts plus a kernel correction.
    {
      Elem tg = G.add(Psi.preimage(g), Psi.kernel_sample(rng));
      Elem th = G.add(Phi.preimage(h), Phi.kernel_sample(rng));
      Elem x = G.add(phi.preimage(pm(tg, th, plus)), phi.kernel_sample(rng));
      Elem xg = phi.preimage(tg), xh = phi.preimage(th);
      Elem n = sub(G, x, pm(xg, xh, plus));
      bool ok = phi.in_kernel(n);
      ok = ok && Psi.in_domain(phi.apply(xg)) && G.eq(Psi.apply(phi.apply(xg)), g);
      ok = ok && Phi.in_domain(phi.apply(xh)) && G.eq(Phi.apply(phi.apply(xh)), h);
      law_e.expect(ok, at + ", " + sg.labels.render(rphi));
    }

    // Kernel of a composite against its four-part decomposition.
    {
      Elem a = G.add(Phi.preimage(Psi.kernel_sample(rng)), Phi.kernel_sample(rng));
      Elem b = G.add(Psi.preimage(Phi.kernel_sample(rng)), Psi.kernel_sample(rng));
      Elem s = G.add(G.add(a, b), G.add(Phi.kernel_sample(rng), Psi.kernel_sample(rng)));
      bool into = PhiPsi.in_kernel(s);
      Elem x = PhiPsi.kernel_sample(rng);
      bool onto = Psi.in_domain(x) && Phi.in_kernel(Psi.apply(x));
      law_f.expect(into && onto, at);
    }

    // Kernels of the factors are absorbed by a triple composite.
    {
      HomRef rT = compose(sg, rPsi, compose(sg, rphi, rPhi));
      HomOracle T = sg.hom(rT);
      Elem x = G.add(T.kernel_sample(rng), G.add(Psi.kernel_sample(rng), Phi.kernel_sample(rng)));
      law_g.expect(T.in_kernel(x), at + ", " + sg.labels.render(rT));
    }

    // Applying Phi to a composite-kernel element lands in the kernel of Psi.
    {
      Elem gk = G.add(Phi.preimage(Psi.kernel_sample(rng)), Phi.kernel_sample(rng));
      law_h.expect(PhiPsi.in_kernel(gk) && Psi.in_kernel(Phi.apply(gk)), at);
    }
  }

  return rep;
}

}  // namespace sgs

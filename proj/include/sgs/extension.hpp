#pragma once

#include "sgs/algebra.hpp"

#include <optional>

namespace sgs {

// Raw pair (label, group element); the quotient below identifies pairs whose
// preimage cosets differ only by the composite kernel.
struct PairElement {
  HomRef label;
  Elem rep;
};

// One representative of an equivalence class of pairs. No canonical form is
// maintained; class equality always goes through ExtSGroup::sim.
struct ExtElement {
  PairElement p;
};

// The enlarged structure built over a base with decidable oracles. Elements
// are classes [label, g]; the base embeds as [identity, g]; each base map
// prolongs to a total map on classes. Labels are shared with the base since
// the prolonged semigroup is isomorphic to the original one.
struct ExtSGroup {
  const SGroup* base = nullptr;

  bool sim(const PairElement&, const PairElement&) const;
  bool sim(const ExtElement& a, const ExtElement& b) const { return sim(a.p, b.p); }

  ExtElement zero() const;
  ExtElement add(const ExtElement&, const ExtElement&) const;
  ExtElement negate(const ExtElement&) const;
  ExtElement sub(const ExtElement&, const ExtElement&) const;
  ExtElement embed(const Elem&) const;
  ExtElement prolong(HomRef, const ExtElement&) const;

  // Nonempty exactly when the class meets the embedded copy of the base;
  // the witness is the base value.
  std::optional<Elem> embedded_value(const ExtElement&) const;

  // Class-preserving representative changes, used to probe well-definedness.
  ExtElement raise(const ExtElement&) const;              // bump the label one step
  ExtElement perturb_rep(const ExtElement&, Rng&) const;  // add a composite-kernel element

  ExtElement sample(Rng&) const;
  // Display form only: embedded classes collapse onto [I_G, value].
  std::string render(const ExtElement&) const;
};

ExtSGroup make_extension(const SGroup&);

bool sim(const ExtSGroup&, const ExtElement&, const ExtElement&);
ExtElement ext_add(const ExtSGroup&, const ExtElement&, const ExtElement&);
ExtElement ext_embed(const ExtSGroup&, const Elem&);
ExtElement prolong_apply(const ExtSGroup&, HomRef, const ExtElement&);

// Strictness: a class meets the base iff its defining pair already takes a
// value there, and the zero class is hit exactly by kernel pairs.
AuditReport verify_strict(const ExtSGroup&, int samples, std::uint64_t seed);

// Closedness: every class is the prolonged image of an embedded element.
AuditReport verify_closed(const ExtSGroup&, int samples, std::uint64_t seed);

// Transport of a base homomorphism to the enlarged structures. Valid when the
// map intertwines the label actions and respects kernels; audit_lift samples
// both conditions plus additivity and representative independence.
struct LiftSpec {
  const SGroup* src = nullptr;
  const SGroup* dst = nullptr;
  std::function<Elem(const Elem&)> map;
  std::function<HomRef(HomRef)> label_map;
};

struct LiftedHom {
  std::function<ExtElement(const ExtElement&)> apply;
};

LiftedHom lift_hom(const LiftSpec&);
AuditReport audit_lift(const LiftSpec&, const ExtSGroup& src_ext, const ExtSGroup& dst_ext,
                       int samples, std::uint64_t seed);

}  // namespace sgs

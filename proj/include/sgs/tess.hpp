#pragma once

#include "sgs/extension.hpp"
#include "sgs/sspace.hpp"

namespace sgs {

// First stage: the per-region enlargement of a family. Restrictions carry a
// class [F, g] to [bond(F), restr(g)], which is well defined because every
// restriction intertwines the label actions and respects kernels.
struct TildeSpace {
  const SSpace* base = nullptr;
  std::map<Region, ExtSGroup, RegionLess> ext;

  const ExtSGroup& at(const Region&) const;
  bool tsim(const Region&, const ExtElement&, const ExtElement&) const;
  ExtElement tzero(const Region&) const;
  ExtElement tadd(const Region&, const ExtElement&, const ExtElement&) const;
  ExtElement tembed(const Region&, const Elem&) const;
  ExtElement tprolong(const Region&, HomRef, const ExtElement&) const;
  ExtElement trestrict(const Region& to, const Region& from, const ExtElement&) const;
  ExtElement tsample(const Region&, Rng&) const;
};

TildeSpace build_tilde(const SSpace&);

// Stage-one audit: restriction family laws at class level, agreement with the
// base restrictions on embedded elements, intertwining, and the transport
// conditions of each region-pair lift.
AuditReport verify_1tess(const TildeSpace&, int samples, std::uint64_t seed);

// A family of first-stage classes over a cover, agreeing on overlaps.
struct CoherentFamily {
  Region gamma;
  Cover cover;
  std::vector<ExtElement> patches;
};

// Second stage element: a coherent family up to overlap-wise agreement.
struct BarElement {
  CoherentFamily fam;
};

struct BarSpace {
  const TildeSpace* t = nullptr;
};

BarSpace build_bar(const TildeSpace&);

bool bar_coherent(const BarSpace&, const CoherentFamily&);

// Two families over the same region agree when their patches match on every
// nonempty cross overlap.
bool approx_sim(const BarSpace&, const BarElement&, const BarElement&);

// Patchwise sum over the common refinement of the two covers.
BarElement bar_add(const BarSpace&, const BarElement&, const BarElement&);
BarElement bar_negate(const BarSpace&, const BarElement&);
BarElement bar_zero(const BarSpace&, const Region&);

// Injective homomorphism from stage one; the chosen cover does not matter.
BarElement b_embed(const BarSpace&, const Region&, const ExtElement&);

BarElement bar_prolong(const BarSpace&, HomRef, const BarElement&);
BarElement bar_restrict(const BarSpace&, const Region& to, const BarElement&);

// Glue of bar elements over a cover of gamma; nullopt when the inputs
// disagree on an overlap.
std::optional<BarElement> bar_glue(const BarSpace&, const Region& gamma,
                                   const std::vector<BarElement>&);

BarElement bar_sample(const BarSpace&, const Region&, Rng&);

// Merge labeled piecewise-polynomial classes over interval patches into one
// class on the target: raises every patch to the highest label by repeated
// antidifferentiation, walks the chain sorted by left endpoint correcting
// each patch by the kernel polynomial it differs by, and stitches. Nullopt
// when the patches fail to cover the target or disagree on an overlap.
std::optional<ExtElement> merge_pp_patches(const Region& gamma, const Cover&,
                                           const std::vector<ExtElement>& patches);

// Search for a stage-one class mapping onto the family under the embedding.
// Success is a constructive surjectivity witness; the failure side is only
// ever reported as a statistic, never asserted.
std::optional<ExtElement> b_image_search(const BarSpace&, const BarElement&);

// Stage-two audit: equivalence laws, group laws, embedding properties,
// restriction laws, gluing round trips, and local closedness.
AuditReport verify_2tess(const BarSpace&, int samples, std::uint64_t seed);

}  // namespace sgs

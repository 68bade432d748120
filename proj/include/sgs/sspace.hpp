#pragma once

#include "sgs/algebra.hpp"
#include "sgs/region.hpp"

#include <map>
#include <optional>

namespace sgs {

// Finite family of regions, closed under intersection, containing the top.
struct Indexer {
  Region top;
  std::vector<Region> regions;
};

AuditReport indexer_validate(const Indexer&);
bool indexer_contains(const Indexer&, const Region&);
// All members contained in gamma.
std::vector<Region> subregions(const Indexer&, const Region& gamma);
// All subsets of the nonempty members of the indexer that cover gamma.
std::vector<Cover> enumerate_covers(const Indexer&, const Region& gamma);

// A family of local structures over an indexer, with a bonding transport of
// labels and a restriction map between comparable regions. Restrictions into
// the empty region are the zero map; bonding there is degenerate and is left
// out of the isomorphism checks.
struct SSpace {
  std::string name;
  Indexer idx;
  std::map<Region, SGroup, RegionLess> groups;
  std::function<HomRef(const Region& to, const Region& from, HomRef)> bond;
  std::function<Elem(const Region& to, const Region& from, const Elem&)> restr;
  // Optional model-level gluing; nullopt result means no exact glue exists.
  std::function<std::optional<Elem>(const Region&, const Cover&, const std::vector<Elem>&)>
      glue_native;
  bool abelian = true;
  bool surjective = true;
  bool with_identity = true;
  bool coherent = true;
};

const SGroup& group_at(const SSpace&, const Region&);

// Structural audit: indexer shape, restriction identity, composition and
// additivity, bonding laws, intertwining, and cover locality.
AuditReport sspace_validate(const SSpace&, int samples, std::uint64_t seed);

// Patches agree on every nonempty pairwise overlap.
bool coherent_check(const SSpace&, const Region& gamma, const Cover&, const std::vector<Elem>&);

// Unique element restricting onto the patches, when the model can produce it.
std::optional<Elem> glue(const SSpace&, const Region& gamma, const Cover&,
                         const std::vector<Elem>&);

// The one-region family of a single group; restriction and bonding collapse
// to identities.
SSpace generated_sspace(const SGroup&);

SSpace subspace(const SSpace&, const Region& top);

// Fixture: piecewise polynomials over (0,3) with the four interval regions
// and the empty region.
SSpace make_pp_fixture_sspace();

// Uniform sampling facade so structures whose elements are classes can be
// compared with plain ones by the same isomorphism checker.
struct SpaceView {
  std::string name;
  Indexer idx;
  LabelMonoid labels;
  std::function<Elem(const Region&, Rng&)> sample;
  // Element on which every label action is defined; plain groups answer with
  // a preimage witness, class-level structures with any sample.
  std::function<Elem(const Region&, HomRef, Rng&)> domain_sample;
  std::function<bool(const Region&, const Elem&, const Elem&)> eq;
  std::function<Elem(const Region&, const Elem&, const Elem&)> add;
  std::function<Elem(const Region&, HomRef, const Elem&)> deriv;
  std::function<Elem(const Region& to, const Region& from, const Elem&)> restr;
};

SpaceView view_of(const SSpace&);

struct IsoWitness {
  std::function<Elem(const Region&, const Elem&)> fwd;
  std::function<Elem(const Region&, const Elem&)> inv;
  std::function<HomRef(HomRef)> label_fwd;  // identity when labels are shared
};

// Samples the witness for bijectivity, additivity, and compatibility with
// derivatives and restrictions on every nonempty region.
AuditReport iso_check(const SpaceView&, const SpaceView&, const IsoWitness&, int samples,
                      std::uint64_t seed);

}  // namespace sgs

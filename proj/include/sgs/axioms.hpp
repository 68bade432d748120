#pragma once

#include "sgs/algebra.hpp"
#include "sgs/extension.hpp"
#include "sgs/region.hpp"
#include "sgs/report.hpp"
#include "sgs/rng.hpp"
#include "sgs/sspace.hpp"
#include "sgs/tess.hpp"

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace sgs {

// A candidate enlargement of one S-group, presented only through the
// operations the axiom systems quantify over. `decompose` is the closedness
// evidence: a label and base element whose prolonged image is the argument.
// Candidates hold pointers into the structures they present; the caller keeps
// those alive.
struct SGroupCandidate {
  std::string name;
  const SGroup* base = nullptr;
  std::function<Elem(Rng&)> sample;
  std::function<bool(const Elem&, const Elem&)> eq;
  std::function<Elem(const Elem&, const Elem&)> add;
  std::function<Elem(const Elem&)> embed;
  std::function<std::optional<Elem>(const Elem&)> as_base;
  std::function<Elem(HomRef, const Elem&)> deriv;
  std::function<std::pair<HomRef, Elem>(const Elem&)> decompose;
};

// A candidate enlargement of an S-space. Ops take the home region first;
// `restr` takes target then source. Plain families carry global closedness
// evidence in `decompose`; locally closed ones answer `local_decompose`
// (a region around the given point where the element is a prolonged
// embedding) and `glue` instead, with `coherent_kind` set.
struct SpaceCandidate {
  std::string name;
  const SSpace* base = nullptr;
  std::vector<Region> regions;  // nonempty index regions
  bool coherent_kind = false;
  std::function<Elem(const Region&, Rng&)> sample;
  std::function<bool(const Region&, const Elem&, const Elem&)> eq;
  std::function<Elem(const Region&, const Elem&, const Elem&)> add;
  std::function<Elem(const Region&, const Elem&)> embed;
  std::function<std::optional<Elem>(const Region&, const Elem&)> as_base;
  std::function<Elem(const Region&, HomRef, const Elem&)> deriv;
  std::function<HomRef(const Region& to, const Region& from, HomRef)> bond;
  std::function<Elem(const Region& to, const Region& from, const Elem&)> restr;
  std::function<std::pair<HomRef, Elem>(const Region&, const Elem&)> decompose;
  std::function<std::tuple<Region, HomRef, Elem>(const Region&, const Elem&, const Rational&)>
      local_decompose;
  std::function<std::optional<Elem>(const Region&,
                                    const std::vector<std::pair<Region, Elem>>&)>
      glue;
};

using CandidateStructure = std::variant<SGroupCandidate, SpaceCandidate>;

SGroupCandidate candidate_of(const ExtSGroup&);
SpaceCandidate candidate_of(const TildeSpace&);
SpaceCandidate candidate_of(const BarSpace&);

// Runs the full or the simplified axiom system matching the candidate's shape
// (single group, region family, or locally closed region family) and reports
// one verdict per axiom. The two systems are equivalent on honest candidates;
// they differ in which axiom a given defect shows up under.
AuditReport check_full(const CandidateStructure&, int samples, std::uint64_t seed);
AuditReport check_simplified(const CandidateStructure&, int samples, std::uint64_t seed);

// Known ways to damage a candidate. Each keeps the interface intact but makes
// a named axiom fail; throws std::invalid_argument when the kind does not
// apply to the candidate's shape.
extern const std::vector<std::string> kMutationKinds;
CandidateStructure mutate(const CandidateStructure&, const std::string& kind);

// Addition recovered from derivatives and decomposition witnesses alone.
// For locally closed candidates this covers the region, sums patchwise
// through the local decompositions, and glues.
Elem derived_add(const SGroupCandidate&, const Elem&, const Elem&);
Elem derived_add(const SpaceCandidate&, const Region&, const Elem&, const Elem&);

}  // namespace sgs

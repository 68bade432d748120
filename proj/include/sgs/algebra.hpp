#pragma once

#include "sgs/report.hpp"
#include "sgs/rng.hpp"

#include <any>
#include <cstdint>
#include <functional>
#include <string>

namespace sgs {

// Carrier element, interpreted only by the model that produced it.
struct Elem {
  std::any v;

  template <class T>
  const T& as() const {
    return std::any_cast<const T&>(v);
  }
};

template <class T>
Elem elem_of(T value) {
  return Elem{std::any(std::move(value))};
}

// Opaque name of a partial homomorphism; meaning is fixed by the owning model.
struct HomRef {
  std::uint64_t id = 0;

  friend bool operator==(HomRef, HomRef) = default;
};

// The semigroup of homomorphism names. compose(a, b) names "a after b".
struct LabelMonoid {
  HomRef identity;
  std::function<HomRef(HomRef, HomRef)> compose;
  std::function<bool(HomRef, HomRef)> equal;
  std::function<std::string(HomRef)> render;
  std::function<HomRef(Rng&)> sample;
};

// Abelian group operations over Elem payloads of one fixed type.
struct GroupModel {
  std::function<Elem()> zero;
  std::function<Elem(const Elem&, const Elem&)> add;
  std::function<Elem(const Elem&)> negate;
  std::function<bool(const Elem&, const Elem&)> eq;
  std::function<Elem(Rng&)> sample;
  std::function<std::string(const Elem&)> render;
};

// Effective presentation of one partial homomorphism: membership in its
// domain and kernel is decidable, preimage produces a witness for any target
// (the semigroup acts surjectively), kernel_sample feeds the audits.
struct HomOracle {
  std::function<bool(const Elem&)> in_domain;
  std::function<Elem(const Elem&)> apply;  // precondition: in_domain
  std::function<Elem(const Elem&)> preimage;
  std::function<bool(const Elem&)> in_kernel;
  std::function<Elem(Rng&)> kernel_sample;
};

struct SGroup {
  std::string name;
  GroupModel group;
  LabelMonoid labels;
  std::function<HomOracle(HomRef)> hom;
  bool abelian = true;
  bool surjective = true;
  bool with_identity = true;
};

inline HomRef compose(const SGroup& sg, HomRef a, HomRef b) { return sg.labels.compose(a, b); }

inline Elem sub(const GroupModel& g, const Elem& a, const Elem& b) {
  return g.add(a, g.negate(b));
}

// Checks the structural laws: group axioms, label semigroup laws, oracle
// coherence (domains are subgroups, preimages witness surjectivity, kernels
// map to zero), and agreement of composite oracles with composed actions.
AuditReport audit_sgroup(const SGroup&, int samples, std::uint64_t seed);

// Sampled checks of the eight closure and transfer laws that the extension
// construction leans on. Items about set inclusions are checked through
// explicit witness decompositions, so every membership test is decidable.
AuditReport transfer_suite(const SGroup&, int samples, std::uint64_t seed);

}  // namespace sgs

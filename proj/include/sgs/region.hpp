#pragma once

#include "sgs/ppfunction.hpp"

#include <string>
#include <vector>

namespace sgs {

// Index of a local structure: an open rational interval, the distinguished
// empty region, or the single abstract index of a generated family.
struct Region {
  enum class Kind { empty, interval, whole };
  Kind kind = Kind::empty;
  Interval iv{};  // meaningful only for Kind::interval

  static Region empty() { return {}; }
  static Region whole() { return {Kind::whole, {}}; }
  static Region of(const Interval& i) { return {Kind::interval, i}; }

  bool is_empty() const { return kind == Kind::empty; }

  friend bool operator==(const Region& a, const Region& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::interval || a.iv == b.iv;
  }
};

// Strict weak order so regions can key maps.
struct RegionLess {
  bool operator()(const Region&, const Region&) const;
};

Region intersect(const Region&, const Region&);
bool subset(const Region&, const Region&);
std::string render_region(const Region&);
Region parse_region(std::string_view);  // "(a,b)", "empty", "I"

// A point interior to a nonempty region; whole regions have no point structure
// and report the sentinel 0.
Rational sample_point(const Region&, Rng&);
bool region_contains(const Region&, const Rational& x);

using Cover = std::vector<Region>;

// True when the nonempty members lie inside the target and their union is the
// whole target; open intervals must overlap pairwise along the chain, since
// finitely many open pieces can only exhaust an interval by overlapping.
bool covers(const Region& target, const Cover&);

}  // namespace sgs

#include "sgs/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgs {

bool RegionLess::operator()(const Region& a, const Region& b) const {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.kind != Region::Kind::interval) return false;
  if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
  return a.iv.hi < b.iv.hi;
}

Region intersect(const Region& a, const Region& b) {
  if (a.is_empty() || b.is_empty()) return Region::empty();
  if (a.kind == Region::Kind::whole) return b;
  if (b.kind == Region::Kind::whole) return a;
  Interval iv{std::max(a.iv.lo, b.iv.lo), std::min(a.iv.hi, b.iv.hi)};
  return iv.valid() ? Region::of(iv) : Region::empty();
}

bool subset(const Region& a, const Region& b) {
  if (a.is_empty()) return true;
  if (b.kind == Region::Kind::whole) return a.kind == Region::Kind::whole || !a.is_empty();
  if (a.kind == Region::Kind::whole) return false;
  if (b.is_empty()) return false;
  return b.iv.lo <= a.iv.lo && a.iv.hi <= b.iv.hi;
}

std::string render_region(const Region& r) {
  switch (r.kind) {
    case Region::Kind::empty: return "empty";
    case Region::Kind::whole: return "I";
    case Region::Kind::interval: return render_interval(r.iv);
  }
  return "?";
}

Region parse_region(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "empty") return Region::empty();
  if (s == "I") return Region::whole();
  return Region::of(parse_interval(s));
}

Rational sample_point(const Region& r, Rng& rng) {
  if (r.is_empty()) throw std::invalid_argument("no points in the empty region");
  if (r.kind == Region::Kind::whole) return Rational(0);
  Rational t = rational_of(uniform_int(rng, 1, 15), 16);
  return r.iv.lo + t * (r.iv.hi - r.iv.lo);
}

bool region_contains(const Region& r, const Rational& x) {
  if (r.is_empty()) return false;
  if (r.kind == Region::Kind::whole) return true;
  return r.iv.contains(x);
}

bool covers(const Region& target, const Cover& cover) {
  if (target.is_empty()) return true;
  std::vector<Region> live;
  for (const Region& r : cover) {
    if (r.is_empty()) continue;
    if (!subset(r, target)) return false;
    live.push_back(r);
  }
  if (target.kind == Region::Kind::whole)
    return std::any_of(live.begin(), live.end(),
                       [](const Region& r) { return r.kind == Region::Kind::whole; });
  if (live.empty()) return false;
  std::sort(live.begin(), live.end(), [](const Region& a, const Region& b) {
    return a.iv.lo != b.iv.lo ? a.iv.lo < b.iv.lo : a.iv.hi > b.iv.hi;
  });
  if (live.front().iv.lo != target.iv.lo) return false;
  Rational reach = live.front().iv.hi;
  for (std::size_t i = 1; i < live.size(); ++i) {
    if (live[i].iv.lo >= reach) return false;  // gap or touching endpoints
    reach = std::max(reach, live[i].iv.hi);
  }
  return reach == target.iv.hi;
}

}  // namespace sgs

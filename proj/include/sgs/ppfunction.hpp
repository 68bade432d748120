#pragma once

#include "sgs/poly.hpp"
#include "sgs/rng.hpp"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgs {

// Open interval with rational endpoints, lo < hi.
struct Interval {
  Rational lo, hi;

  bool valid() const { return lo < hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string render_interval(const Interval&);
Interval parse_interval(std::string_view);  // "(a,b)"

// Continuous piecewise polynomial on an open interval.
// Invariants: breaks strictly increasing and interior to the domain,
// pieces.size() == breaks.size() + 1, adjacent pieces agree at their break
// (continuity) and are distinct polynomials (normal form).
struct PPFunction {
  Interval domain;
  std::vector<Rational> breaks;
  std::vector<Poly> pieces;

  friend bool operator==(const PPFunction&, const PPFunction&) = default;
};

inline constexpr int kRegularityInf = std::numeric_limits<int>::max();

PPFunction pp_zero(const Interval&);
PPFunction pp_from_poly(const Interval&, const Poly&);

// Throws std::invalid_argument when an invariant fails; used on deserialized input.
void pp_validate(const PPFunction&);

Rational pp_eval(const PPFunction&, const Rational& x);

PPFunction pp_add(const PPFunction&, const PPFunction&);
PPFunction pp_neg(const PPFunction&);
PPFunction pp_sub(const PPFunction&, const PPFunction&);
PPFunction pp_mul(const PPFunction&, const PPFunction&);
bool pp_eq(const PPFunction&, const PPFunction&);
bool pp_is_zero(const PPFunction&);

// Largest n such that one-sided derivatives of orders 0..n agree at every break;
// kRegularityInf when the function is a single polynomial.
int pp_regularity_order(const PPFunction&);

// Requires pp_regularity_order >= 1 so the result is continuous.
PPFunction pp_derivative(const PPFunction&);
PPFunction pp_derivative_n(const PPFunction&, int n);

// Continuous antiderivative normalized to value 0 at the domain midpoint.
PPFunction pp_antiderivative(const PPFunction&);
PPFunction pp_antiderivative_n(const PPFunction&, int n);

// True when the function is a single polynomial piece of degree < n.
bool pp_is_poly_deg_lt(const PPFunction&, int n);

// Restriction to an open subinterval.
PPFunction pp_restrict(const PPFunction&, const Interval&);

// Merge patches that agree exactly on their pairwise overlaps into one
// function on the target; nullopt when the patches disagree somewhere or
// fail to cover the target.
std::optional<PPFunction> pp_merge(const Interval& target,
                                   const std::vector<std::pair<Interval, PPFunction>>& patches);

// Random continuous piecewise polynomial with a few breaks, then smoothed
// to class C^n by n-fold antidifferentiation.
PPFunction sample_pp(Rng&, const Interval&);
PPFunction sample_pp_cn(Rng&, const Interval&, int n);
Poly sample_poly(Rng&, int max_degree);

std::string render_pp(const PPFunction&);

}  // namespace sgs

#pragma once

#include "sgs/algebra.hpp"
#include "sgs/ppfunction.hpp"

#include <vector>

namespace sgs {

// Integers with the division maps: label n >= 1 acts on multiples of n by
// m -> m/n, labels compose by multiplication, every kernel is trivial.
SGroup make_int_sgroup();

// Continuous piecewise polynomials on an open interval with the differentiation
// maps: label n >= 0 is the n-th derivative, defined on the C^n elements,
// labels compose by addition, kernel of n is the polynomials of degree < n.
SGroup make_pp_sgroup(const Interval&);

// Integers mod p under the multiplication automorphisms; every map is total
// and invertible, so the extension construction collapses onto the base.
SGroup make_trivial_sgroup(int p = 5);

// One-element group with only the identity map; carrier for the empty region.
SGroup make_zero_sgroup();

struct ModelDescriptor {
  std::string name;
  std::string summary;
  std::function<SGroup()> make;
};

const std::vector<ModelDescriptor>& model_registry();
const ModelDescriptor* find_model(std::string_view name);

// Exact fraction arithmetic, written against the rational number type only;
// serves as the independent reference for the integer-model reconstruction.
struct FractionOracle {
  Rational value(const Int& m, const Int& n) const;  // m/n, n != 0
  Rational add(const Rational&, const Rational&) const;
  // All reduced fractions with denominator <= max_den and |value| <= bound.
  std::vector<Rational> enumerate(int max_den, const Rational& bound) const;
};

FractionOracle fraction_oracle();

// Payload helpers for the fixed models.
Elem int_elem(std::int64_t);
HomRef int_label(std::uint64_t n);
HomRef pp_label(std::uint64_t order);

}  // namespace sgs

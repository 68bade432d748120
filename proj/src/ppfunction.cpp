#include "sgs/ppfunction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgs {

std::string render_interval(const Interval& iv) {
  return "(" + render_rational(iv.lo) + "," + render_rational(iv.hi) + ")";
}

Interval parse_interval(std::string_view s) {
  auto fail = [&] { throw std::invalid_argument("bad interval: " + std::string(s)); };
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') fail();
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) fail();
  Interval iv{parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
  if (!iv.valid()) fail();
  return iv;
}

namespace {

// Merge adjacent equal pieces; assumes sizes already consistent.
void pp_normalize(PPFunction& f) {
  std::vector<Rational> nb;
  std::vector<Poly> np;
  np.push_back(f.pieces[0]);
  for (std::size_t i = 0; i < f.breaks.size(); ++i) {
    if (f.pieces[i + 1] == np.back()) continue;
    nb.push_back(f.breaks[i]);
    np.push_back(f.pieces[i + 1]);
  }
  f.breaks = std::move(nb);
  f.pieces = std::move(np);
}

// Index of the piece governing x; at a break the right piece is chosen.
std::size_t piece_index(const PPFunction& f, const Rational& x) {
  std::size_t i = 0;
  while (i < f.breaks.size() && x >= f.breaks[i]) ++i;
  return i;
}

}  // namespace

PPFunction pp_zero(const Interval& iv) { return pp_from_poly(iv, Poly::zero()); }

PPFunction pp_from_poly(const Interval& iv, const Poly& p) {
  if (!iv.valid()) throw std::invalid_argument("empty interval");
  PPFunction f;
  f.domain = iv;
  f.pieces = {p};
  return f;
}

void pp_validate(const PPFunction& f) {
  if (!f.domain.valid()) throw std::invalid_argument("pp: empty domain");
  if (f.pieces.size() != f.breaks.size() + 1) throw std::invalid_argument("pp: piece count");
  for (std::size_t i = 0; i < f.breaks.size(); ++i) {
    if (!f.domain.contains(f.breaks[i])) throw std::invalid_argument("pp: break outside domain");
    if (i > 0 && !(f.breaks[i - 1] < f.breaks[i]))
      throw std::invalid_argument("pp: breaks not increasing");
    if (f.pieces[i].eval(f.breaks[i]) != f.pieces[i + 1].eval(f.breaks[i]))
      throw std::invalid_argument("pp: discontinuous at break " + render_rational(f.breaks[i]));
    if (f.pieces[i] == f.pieces[i + 1]) throw std::invalid_argument("pp: unmerged pieces");
  }
  for (const Poly& p : f.pieces)
    if (!p.coeff.empty() && p.coeff.back() == 0) throw std::invalid_argument("pp: denormal piece");
}

Rational pp_eval(const PPFunction& f, const Rational& x) {
  return f.pieces[piece_index(f, x)].eval(x);
}

namespace {

template <class Op>
PPFunction pp_pointwise(const PPFunction& a, const PPFunction& b, Op op) {
  if (a.domain != b.domain) throw std::invalid_argument("pp: domain mismatch");
  std::set<Rational> cuts(a.breaks.begin(), a.breaks.end());
  cuts.insert(b.breaks.begin(), b.breaks.end());
  PPFunction r;
  r.domain = a.domain;
  r.breaks.assign(cuts.begin(), cuts.end());
  Rational probe = r.domain.lo;
  for (std::size_t i = 0; i <= r.breaks.size(); ++i) {
    // Any point inside the i-th segment identifies the governing pieces.
    Rational at = i < r.breaks.size() ? r.breaks[i] : r.domain.hi;
    Rational inside = (probe + at) / 2;
    r.pieces.push_back(op(a.pieces[piece_index(a, inside)], b.pieces[piece_index(b, inside)]));
    probe = at;
  }
  pp_normalize(r);
  return r;
}

}  // namespace

PPFunction pp_add(const PPFunction& a, const PPFunction& b) {
  return pp_pointwise(a, b, [](const Poly& p, const Poly& q) { return p + q; });
}

PPFunction pp_neg(const PPFunction& a) {
  PPFunction r = a;
  for (auto& p : r.pieces) p = -p;
  return r;
}

PPFunction pp_sub(const PPFunction& a, const PPFunction& b) { return pp_add(a, pp_neg(b)); }

PPFunction pp_mul(const PPFunction& a, const PPFunction& b) {
  return pp_pointwise(a, b, [](const Poly& p, const Poly& q) { return p * q; });
}

bool pp_eq(const PPFunction& a, const PPFunction& b) {
  if (a.domain != b.domain) throw std::invalid_argument("pp: domain mismatch");
  return a.breaks == b.breaks && a.pieces == b.pieces;
}

bool pp_is_zero(const PPFunction& f) { return f.breaks.empty() && f.pieces[0].is_zero(); }

int pp_regularity_order(const PPFunction& f) {
  if (f.breaks.empty()) return kRegularityInf;
  int reg = kRegularityInf;
  for (std::size_t i = 0; i < f.breaks.size(); ++i) {
    Poly left = f.pieces[i], right = f.pieces[i + 1];
    int order = -1;
    while (left.eval(f.breaks[i]) == right.eval(f.breaks[i])) {
      ++order;
      if (left.is_zero() && right.is_zero()) break;  // cannot happen for distinct pieces
      left = left.derivative();
      right = right.derivative();
    }
    reg = std::min(reg, order);
  }
  return reg;
}

PPFunction pp_derivative(const PPFunction& f) {
  if (pp_regularity_order(f) < 1) throw std::invalid_argument("pp: derivative of C^0 function");
  PPFunction r = f;
  for (auto& p : r.pieces) p = p.derivative();
  pp_normalize(r);
  return r;
}

PPFunction pp_derivative_n(const PPFunction& f, int n) {
  PPFunction r = f;
  for (int i = 0; i < n; ++i) r = pp_derivative(r);
  return r;
}

PPFunction pp_antiderivative(const PPFunction& f) {
  PPFunction r;
  r.domain = f.domain;
  r.breaks = f.breaks;
  r.pieces.push_back(f.pieces[0].antiderivative());
  for (std::size_t i = 0; i < f.breaks.size(); ++i) {
    Poly next = f.pieces[i + 1].antiderivative();
    // Shift the constant so the antiderivative is continuous at the break.
    Rational gap = r.pieces[i].eval(f.breaks[i]) - next.eval(f.breaks[i]);
    r.pieces.push_back(next + Poly::constant(gap));
  }
  Rational at_mid = pp_eval(r, r.domain.midpoint());
  if (at_mid != 0) {
    for (auto& p : r.pieces) p = p + Poly::constant(-at_mid);
  }
  pp_normalize(r);
  return r;
}

PPFunction pp_antiderivative_n(const PPFunction& f, int n) {
  PPFunction r = f;
  for (int i = 0; i < n; ++i) r = pp_antiderivative(r);
  return r;
}

bool pp_is_poly_deg_lt(const PPFunction& f, int n) {
  return f.breaks.empty() && f.pieces[0].degree() < n;
}

PPFunction pp_restrict(const PPFunction& f, const Interval& to) {
  if (!(f.domain.lo <= to.lo && to.hi <= f.domain.hi) || !to.valid())
    throw std::invalid_argument("pp: restriction target not a subinterval");
  PPFunction r;
  r.domain = to;
  for (std::size_t i = 0; i < f.breaks.size(); ++i)
    if (to.contains(f.breaks[i])) r.breaks.push_back(f.breaks[i]);
  std::size_t first = piece_index(f, to.lo);
  for (std::size_t i = first; i <= first + r.breaks.size(); ++i) r.pieces.push_back(f.pieces[i]);
  pp_normalize(r);
  return r;
}

std::optional<PPFunction> pp_merge(const Interval& target,
                                   const std::vector<std::pair<Interval, PPFunction>>& patches) {
  std::vector<std::pair<Interval, PPFunction>> ps = patches;
  std::sort(ps.begin(), ps.end(),
            [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
  if (ps.empty() || ps.front().first.lo != target.lo) return std::nullopt;
  for (const auto& [iv, f] : ps)
    if (f.domain != iv) return std::nullopt;
  PPFunction acc = ps.front().second;
  for (std::size_t j = 1; j < ps.size(); ++j) {
    const auto& [iv, f] = ps[j];
    if (iv.hi <= acc.domain.hi) {
      // Patch already covered; it must agree with what is built so far.
      if (!pp_eq(pp_restrict(acc, iv), f)) return std::nullopt;
      continue;
    }
    Interval overlap{iv.lo, acc.domain.hi};
    if (!overlap.valid()) return std::nullopt;  // gap
    if (!pp_eq(pp_restrict(acc, overlap), pp_restrict(f, overlap))) return std::nullopt;
    // Stitch at an interior point of the overlap; the governing polynomials
    // on both sides coincide there, so continuity and normal form survive.
    Rational t = overlap.midpoint();
    PPFunction merged;
    merged.domain = {acc.domain.lo, iv.hi};
    std::size_t nl = 0;
    for (const Rational& b : acc.breaks)
      if (b < t) {
        merged.breaks.push_back(b);
        ++nl;
      }
    std::size_t nr = 0;
    for (const Rational& b : f.breaks)
      if (b < t) ++nr;
    for (std::size_t i = nr; i < f.breaks.size(); ++i) merged.breaks.push_back(f.breaks[i]);
    merged.pieces.assign(acc.pieces.begin(), acc.pieces.begin() + nl + 1);
    merged.pieces.insert(merged.pieces.end(), f.pieces.begin() + nr + 1, f.pieces.end());
    pp_normalize(merged);
    acc = std::move(merged);
  }
  if (acc.domain != target) return std::nullopt;
  return acc;
}

Poly sample_poly(Rng& rng, int max_degree) {
  Poly p;
  int deg = static_cast<int>(uniform_int(rng, 0, max_degree));
  for (int i = 0; i <= deg; ++i)
    p.coeff.push_back(rational_of(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3)));
  p.normalize();
  return p;
}

PPFunction sample_pp(Rng& rng, const Interval& iv) {
  int nbreaks = static_cast<int>(uniform_int(rng, 0, 3));
  std::set<Rational> cuts;
  while (static_cast<int>(cuts.size()) < nbreaks) {
    // Grid points k/8 of the way across keep coefficients small.
    Rational t = rational_of(uniform_int(rng, 1, 7), 8);
    cuts.insert(iv.lo + t * (iv.hi - iv.lo));
  }
  PPFunction f;
  f.domain = iv;
  f.breaks.assign(cuts.begin(), cuts.end());
  f.pieces.push_back(sample_poly(rng, 3));
  for (const Rational& b : f.breaks) {
    Poly q = sample_poly(rng, 3);
    Rational gap = f.pieces.back().eval(b) - q.eval(b);
    f.pieces.push_back(q + Poly::constant(gap));
  }
  pp_normalize(f);
  return f;
}

PPFunction sample_pp_cn(Rng& rng, const Interval& iv, int n) {
  return pp_antiderivative_n(sample_pp(rng, iv), n);
}

std::string render_pp(const PPFunction& f) {
  if (f.breaks.empty()) return render_poly(f.pieces[0]);
  std::string out = "pw[";
  Rational lo = f.domain.lo;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    Rational hi = i < f.breaks.size() ? f.breaks[i] : f.domain.hi;
    if (i) out += "; ";
    out += "(" + render_rational(lo) + "," + render_rational(hi) + "): " + render_poly(f.pieces[i]);
    lo = hi;
  }
  return out + "]";
}

}  // namespace sgs

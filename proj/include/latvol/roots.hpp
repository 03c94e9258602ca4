#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "latvol/polynomial.hpp"

namespace latvol {

// Isolating interval for one real root.  lo == hi means the root is the
// rational number lo, known exactly; otherwise the interval contains exactly
// one root of the polynomial it was derived from, and that root is irrational.
struct RootEnclosure {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

struct RatInterval {
  Rat lo, hi;
};

// Certified enclosure of p([a, b]) by interval Horner evaluation.
inline RatInterval interval_eval(const RatPoly& p, const Rat& a, const Rat& b) {
  if (a > b) throw std::invalid_argument("interval_eval: a > b");
  RatInterval r{Rat(0), Rat(0)};
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    Rat v1 = r.lo * a, v2 = r.lo * b, v3 = r.hi * a, v4 = r.hi * b;
    r.lo = std::min({v1, v2, v3, v4}) + c[i];
    r.hi = std::max({v1, v2, v3, v4}) + c[i];
  }
  return r;
}

// Sturm chain of a squarefree polynomial.  Each element is scaled to
// primitive integer coefficients; the scalings are positive, so all sign
// information is preserved.
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& squarefree) {
    if (squarefree.is_zero())
      throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(integer_primitive(squarefree));
    if (chain_[0].degree() == 0) return;
    chain_.push_back(integer_primitive(chain_[0].derivative()));
    while (chain_.back().degree() > 0) {
      RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;  // only for non-squarefree input
      chain_.push_back(integer_primitive(-r));
    }
  }

  const RatPoly& poly() const { return chain_[0]; }

  int variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const RatPoly& f : chain_) {
      int s = sgn(f.eval(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  // Number of roots in (a, b).  Requires a < b and no root at a or b.
  long count_in(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
  }

 private:
  std::vector<RatPoly> chain_;
};

namespace detail {

// Divides out the simple root r; division must be exact.
inline RatPoly deflate(const RatPoly& g, const Rat& r) {
  auto [q, rem] = divmod(g, RatPoly({-r, Rat(1)}));
  if (!rem.is_zero()) throw std::logic_error("deflate: not a root");
  return q;
}

// Any rational root of a primitive integer polynomial has denominator
// dividing the leading coefficient; below this width an isolating interval
// contains at most one such candidate.
inline Rat rational_root_resolution(const RatPoly& primitive_g) {
  Int b = abs(primitive_g.leading().get_num());
  return make_rat(Int(1), b * b);
}

// Bisect an interval with a sign change until it is narrower than max_width.
// Returns a degenerate enclosure if a bisection point lands on the root.
inline RootEnclosure bisect_to_width(const RatPoly& g, Rat a, Rat b,
                                     const Rat& max_width) {
  while (b - a >= max_width) {
    Rat m = (a + b) / 2;
    int s = sgn(g.eval(m));
    if (s == 0) return {m, m};
    if (s == sgn(g.eval(a)))
      a = m;
    else
      b = m;
  }
  return {a, b};
}

}  // namespace detail

// Disjoint isolating enclosures, one per distinct real root of p in [lo, hi],
// sorted by position.  Rational roots (including roots at the endpoints) come
// back as degenerate point enclosures; every non-degenerate enclosure holds
// exactly one root, and that root is certified irrational.
inline std::vector<RootEnclosure> isolate_roots(const RatPoly& p,
                                                const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("isolate_roots: lo must be < hi");
  RatPoly g0 = integer_primitive(squarefree_part(p));
  if (g0.degree() == 0) return {};

  std::vector<Rat> rational_roots;
  if (sgn(g0.eval(lo)) == 0) rational_roots.push_back(lo);
  if (sgn(g0.eval(hi)) == 0) rational_roots.push_back(hi);

  std::vector<RootEnclosure> intervals;
  for (;;) {
    RatPoly g = g0;
    for (const Rat& r : rational_roots) g = detail::deflate(g, r);
    g = integer_primitive(g);
    intervals.clear();
    if (g.degree() == 0) break;

    SturmChain chain(g);
    Rat res = detail::rational_root_resolution(g);
    std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
    bool restart = false;
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      long n = chain.count_in(a, b);
      if (n == 0) continue;
      if (n == 1) {
        if (sgn(g.eval(a)) * sgn(g.eval(b)) >= 0)
          throw std::logic_error("isolate_roots: missing sign change");
        isolated.emplace_back(a, b);
        continue;
      }
      Rat m = (a + b) / 2;
      if (sgn(g.eval(m)) == 0) {
        rational_roots.push_back(m);
        restart = true;
        break;
      }
      stack.emplace_back(a, m);
      stack.emplace_back(m, b);
    }
    if (restart) continue;

    for (auto& [a, b] : isolated) {
      RootEnclosure e = detail::bisect_to_width(g, a, b, res);
      if (e.is_point()) {
        intervals.push_back(e);
        continue;
      }
      Rat s = simplest_rational_in(e.lo, e.hi);
      if (sgn(g.eval(s)) == 0)
        intervals.push_back({s, s});
      else
        intervals.push_back(e);  // no rational of eligible denominator fits
    }
    break;
  }

  for (const Rat& r : rational_roots) intervals.push_back({r, r});

  // Shrink non-degenerate enclosures until they are pairwise disjoint and
  // avoid every known point root.  Distinct roots separate under bisection.
  RatPoly g_all = g0;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      RootEnclosure& e = intervals[i];
      if (e.is_point()) continue;
      bool conflict = false;
      for (std::size_t j = 0; j < intervals.size() && !conflict; ++j)
        if (j != i && intervals[j].hi >= e.lo && intervals[j].lo <= e.hi)
          conflict = true;
      if (!conflict) continue;
      RatPoly g = g_all;
      for (const Rat& r : rational_roots) g = detail::deflate(g, r);
      RootEnclosure tight =
          detail::bisect_to_width(g, e.lo, e.hi, e.width() / 2);
      e = tight;
      again = true;
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const RootEnclosure& x, const RootEnclosure& y) {
              return x.lo < y.lo;
            });
  return intervals;
}

// Narrows an enclosure produced by isolate_roots(p, ...) below max_width.
inline RootEnclosure refine_enclosure(const RatPoly& p, const RootEnclosure& e,
                                      const Rat& max_width) {
  if (sgn(max_width) <= 0)
    throw std::invalid_argument("refine_enclosure: width must be positive");
  if (e.is_point()) return e;
  RatPoly g = integer_primitive(squarefree_part(p));
  if (sgn(g.eval(e.lo)) * sgn(g.eval(e.hi)) >= 0)
    throw std::invalid_argument("refine_enclosure: not an isolating enclosure");
  return detail::bisect_to_width(g, e.lo, e.hi, max_width);
}

}  // namespace latvol

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "latvol/errors.hpp"
#include "latvol/matrix.hpp"

namespace latvol {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Barycentric coordinate vector: d+1 rationals summing to exactly 1.
// The sorted flag records whether the entries are in descending order.
class BetaVector {
 public:
  explicit BetaVector(std::vector<Rat> entries, bool expect_sorted = false)
      : e_(std::move(entries)), sorted_(expect_sorted) {
    if (e_.size() < 2)
      throw std::invalid_argument("BetaVector: need at least 2 entries");
    Rat s(0);
    for (const Rat& v : e_) s += v;
    if (s != 1) throw std::invalid_argument("BetaVector: entries must sum to 1");
    if (sorted_ && !std::is_sorted(e_.begin(), e_.end(),
                                   [](const Rat& a, const Rat& b) { return a > b; }))
      throw std::invalid_argument("BetaVector: entries not in descending order");
  }

  std::size_t size() const { return e_.size(); }
  const Rat& operator[](std::size_t i) const { return e_.at(i); }
  const std::vector<Rat>& entries() const { return e_; }
  bool sorted_flag() const { return sorted_; }

  Rat min_entry() const { return *std::min_element(e_.begin(), e_.end()); }

  friend bool operator==(const BetaVector& a, const BetaVector& b) {
    return a.e_ == b.e_ && a.sorted_ == b.sorted_;
  }

 private:
  std::vector<Rat> e_;
  bool sorted_;
};

// Descending copy plus the permutation: beta[i] belongs to the vertex with
// original index vertex_order[i].  Stable, so ties keep original order.
struct SortedBarycentric {
  BetaVector beta;
  std::vector<std::size_t> vertex_order;
};

inline SortedBarycentric sort_descending(const BetaVector& b) {
  std::vector<std::size_t> idx(b.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return b[i] > b[j]; });
  std::vector<Rat> sorted(b.size());
  for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = b[idx[i]];
  return {BetaVector(std::move(sorted), true), std::move(idx)};
}

// Full-dimensional lattice simplex: d+1 affinely independent integer points
// in Z^d.  On construction the barycentric coordinates are precomputed as
// integer affine forms  beta_i(x) = (coef_i . x + const_i) / den  with a
// common positive denominator, so all point queries are exact integer
// arithmetic.
class LatticeSimplex {
 public:
  LatticeSimplex(unsigned d, std::vector<IntVec> vertices)
      : d_(d), verts_(std::move(vertices)) {
    if (d_ == 0) throw std::invalid_argument("LatticeSimplex: dimension must be >= 1");
    if (verts_.size() != d_ + 1)
      throw std::invalid_argument("LatticeSimplex: need d+1 vertices");
    for (const IntVec& v : verts_)
      if (v.size() != d_)
        throw std::invalid_argument("LatticeSimplex: vertex has wrong dimension");

    // Columns of M are the edge vectors from vertex 0.
    std::vector<Int> m(d_ * d_);
    for (unsigned j = 0; j < d_; ++j)
      for (unsigned i = 0; i < d_; ++i)
        m[i * d_ + j] = verts_[j + 1][i] - verts_[0][i];
    det_ = det_int(m, d_);
    if (det_ == 0)
      throw singular_matrix_error("LatticeSimplex: vertices are affinely dependent");

    RatMatrix mq(d_, d_);
    for (unsigned i = 0; i < d_; ++i)
      for (unsigned j = 0; j < d_; ++j) mq(i, j) = Rat(m[i * d_ + j]);
    RatMatrix minv = inverse(mq);

    den_ = abs(det_);
    Int scale = det_ > 0 ? det_ : Int(-det_);
    form_coef_.assign(d_ + 1, IntVec(d_));
    form_const_.assign(d_ + 1, Int(0));
    for (unsigned r = 0; r < d_; ++r) {
      for (unsigned c = 0; c < d_; ++c) {
        Rat v = Rat(scale) * minv(r, c);
        if (v.get_den() != 1)
          throw std::logic_error("LatticeSimplex: adjugate not integral");
        form_coef_[r + 1][c] = v.get_num();
      }
      Int acc(0);
      for (unsigned c = 0; c < d_; ++c)
        acc += form_coef_[r + 1][c] * verts_[0][c];
      form_const_[r + 1] = -acc;
    }
    form_const_[0] = den_;
    for (unsigned c = 0; c < d_; ++c) {
      Int s(0);
      for (unsigned r = 1; r <= d_; ++r) s += form_coef_[r][c];
      form_coef_[0][c] = -s;
    }
    for (unsigned r = 1; r <= d_; ++r) form_const_[0] -= form_const_[r];
  }

  unsigned dimension() const { return d_; }
  const std::vector<IntVec>& vertices() const { return verts_; }

  // Signed edge-matrix determinant; |det| = d! * volume.
  const Int& edge_det() const { return det_; }
  const Int& form_denominator() const { return den_; }

  // Numerator of beta_i at a lattice point (denominator is form_denominator).
  Int form_value(std::size_t i, const IntVec& x) const {
    Int acc = form_const_[i];
    for (unsigned c = 0; c < d_; ++c) acc += form_coef_[i][c] * x[c];
    return acc;
  }

  Rat form_value(std::size_t i, const RatVec& x) const {
    Rat acc(form_const_[i]);
    for (unsigned c = 0; c < d_; ++c) acc += Rat(form_coef_[i][c]) * x[c];
    return acc;
  }

  friend bool operator==(const LatticeSimplex& a, const LatticeSimplex& b) {
    return a.d_ == b.d_ && a.verts_ == b.verts_;
  }

 private:
  unsigned d_;
  std::vector<IntVec> verts_;
  std::vector<IntVec> form_coef_;
  std::vector<Int> form_const_;
  Int det_;
  Int den_;
};

namespace detail {
inline bool is_descending(const std::vector<Rat>& v) {
  return std::is_sorted(v.begin(), v.end(),
                        [](const Rat& a, const Rat& b) { return a > b; });
}
}  // namespace detail

template <class Vec>
inline BetaVector barycentric(const LatticeSimplex& s, const Vec& x) {
  if (x.size() != s.dimension())
    throw std::invalid_argument("barycentric: point has wrong dimension");
  std::vector<Rat> beta(s.dimension() + 1);
  for (std::size_t i = 0; i <= s.dimension(); ++i)
    beta[i] = Rat(s.form_value(i, x)) / Rat(s.form_denominator());
  bool sorted = detail::is_descending(beta);
  return BetaVector(std::move(beta), sorted);
}

inline Rat volume(const LatticeSimplex& s) {
  return make_rat(abs(s.edge_det()), factorial(s.dimension()));
}

inline Int normalized_volume(const LatticeSimplex& s) {
  return abs(s.edge_det());
}

inline bool is_interior(const LatticeSimplex& s, const IntVec& x) {
  if (x.size() != s.dimension())
    throw std::invalid_argument("is_interior: point has wrong dimension");
  for (std::size_t i = 0; i <= s.dimension(); ++i)
    if (sgn(s.form_value(i, x)) <= 0) return false;
  return true;
}

inline bool is_interior(const LatticeSimplex& s, const RatVec& x) {
  if (x.size() != s.dimension())
    throw std::invalid_argument("is_interior: point has wrong dimension");
  for (std::size_t i = 0; i <= s.dimension(); ++i)
    if (sgn(s.form_value(i, x)) <= 0) return false;
  return true;
}

// All lattice points strictly inside, in lexicographic order.  Scans the
// bounding box; throws budget_error before starting if the box has more than
// cell_budget cells.
inline std::vector<IntVec> interior_points(
    const LatticeSimplex& s, unsigned long long cell_budget = 100000000ULL) {
  unsigned d = s.dimension();
  IntVec lo(d), hi(d);
  for (unsigned c = 0; c < d; ++c) {
    lo[c] = s.vertices()[0][c];
    hi[c] = s.vertices()[0][c];
    for (const IntVec& v : s.vertices()) {
      if (v[c] < lo[c]) lo[c] = v[c];
      if (v[c] > hi[c]) hi[c] = v[c];
    }
  }
  Int cells(1);
  for (unsigned c = 0; c < d; ++c) cells *= hi[c] - lo[c] + 1;
  if (cells > Int(static_cast<unsigned long>(cell_budget)))
    throw budget_error("interior_points: bounding box of " + to_string(cells) +
                       " cells exceeds budget of " + std::to_string(cell_budget));

  std::vector<IntVec> out;
  IntVec x = lo;
  for (;;) {
    bool inside = true;
    for (std::size_t i = 0; i <= d && inside; ++i)
      if (sgn(s.form_value(i, x)) <= 0) inside = false;
    if (inside) out.push_back(x);
    // Odometer with the last coordinate fastest: lexicographic order.
    unsigned c = d;
    while (c > 0) {
      --c;
      if (x[c] < hi[c]) {
        ++x[c];
        for (unsigned r = c + 1; r < d; ++r) x[r] = lo[r];
        break;
      }
      if (c == 0) return out;
    }
  }
}

struct MaxMinResult {
  IntVec point;
  BetaVector beta;  // descending
  Rat gamma;
};

// Interior lattice point maximizing the smallest barycentric coordinate.
// Ties resolve to the lexicographically smallest point.
inline MaxMinResult maxmin_point(const LatticeSimplex& s,
                                 unsigned long long cell_budget = 100000000ULL) {
  std::vector<IntVec> pts = interior_points(s, cell_budget);
  if (pts.empty())
    throw empty_interior_error("maxmin_point: simplex has no interior lattice points");
  const IntVec* best = nullptr;
  Rat best_gamma;
  for (const IntVec& p : pts) {
    Rat g = Rat(s.form_value(0, p));
    for (std::size_t i = 1; i <= s.dimension(); ++i) {
      Rat v(s.form_value(i, p));
      if (v < g) g = v;
    }
    if (best == nullptr || g > best_gamma) {
      best = &p;
      best_gamma = g;
    }
  }
  SortedBarycentric sb = sort_descending(barycentric(s, *best));
  return {*best, sb.beta, sb.beta[s.dimension()]};
}

struct VolumeBoundCheck {
  Rat volume;
  Rat bound;
  bool holds;
};

// vol(S) <= k / (d! * beta_1 ... beta_d) for an interior lattice point x,
// where k counts interior lattice points and the product omits the smallest
// coordinate.
inline VolumeBoundCheck check_pikhurko_volume_bound(const LatticeSimplex& s,
                                                    const IntVec& x) {
  if (!is_interior(s, x))
    throw std::domain_error("check_pikhurko_volume_bound: point not interior");
  std::size_t k = interior_points(s).size();
  SortedBarycentric sb = sort_descending(barycentric(s, x));
  Rat prod(1);
  for (std::size_t i = 0; i < s.dimension(); ++i) prod *= sb.beta[i];
  Rat bound = Rat(long(k)) / (Rat(factorial(s.dimension())) * prod);
  Rat vol = volume(s);
  return {vol, bound, vol <= bound};
}

}  // namespace latvol

#pragma once

#include <optional>

#include "latvol/simplex.hpp"

namespace latvol {

struct PsCheckEntry {
  unsigned t;
  Rat lhs;
  Rat rhs;
  bool holds;
  bool tight;
};

struct PsCheckReport {
  std::vector<PsCheckEntry> entries;  // t = 1..d in order

  bool all_hold() const {
    for (const auto& e : entries)
      if (!e.holds) return false;
    return true;
  }

  // Smallest violated t, or 0 when every inequality holds.
  unsigned first_violation() const {
    for (const auto& e : entries)
      if (!e.holds) return e.t;
    return 0;
  }
};

namespace detail {
inline void require_sorted_unit_beta(const BetaVector& beta) {
  if (!beta.sorted_flag())
    throw std::domain_error("beta must be sorted descending (sort_descending)");
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (sgn(beta[i]) <= 0 || beta[i] >= 1)
      throw std::domain_error("beta entries must lie strictly in (0,1)");
}
}  // namespace detail

// prod_{i<=t} beta_i <= sum_{j>t} beta_j for each t.
inline PsCheckReport check_product_sum(const BetaVector& beta) {
  detail::require_sorted_unit_beta(beta);
  std::size_t d = beta.size() - 1;
  PsCheckReport rep;
  Rat prod(1), tail(0);
  for (std::size_t j = 0; j <= d; ++j) tail += beta[j];
  for (unsigned t = 1; t <= d; ++t) {
    prod *= beta[t - 1];
    tail -= beta[t - 1];
    rep.entries.push_back({t, prod, tail, prod <= tail, prod == tail});
  }
  return rep;
}

// prod_{i<=t} (beta_i - beta_{d+1}) <= sum_{j>t} beta_j for each t.
inline PsCheckReport check_generalized(const BetaVector& beta) {
  detail::require_sorted_unit_beta(beta);
  std::size_t d = beta.size() - 1;
  const Rat& last = beta[d];
  PsCheckReport rep;
  Rat prod(1), tail(0);
  for (std::size_t j = 0; j <= d; ++j) tail += beta[j];
  for (unsigned t = 1; t <= d; ++t) {
    prod *= beta[t - 1] - last;
    tail -= beta[t - 1];
    rep.entries.push_back({t, prod, tail, prod <= tail, prod == tail});
  }
  return rep;
}

// The (t+1)x(t+1) matrix whose integer preimages of the open unit cube drive
// the improvement step: diagonal 1/(beta_i - beta_{d+1}), last column
// -beta_i/(beta_i - beta_{d+1}), last row (-1,...,-1,1).
inline RatMatrix build_ps_matrix(const BetaVector& beta, unsigned t) {
  detail::require_sorted_unit_beta(beta);
  std::size_t d = beta.size() - 1;
  if (t < 1 || t > d) throw std::invalid_argument("build_ps_matrix: t out of range");
  const Rat& last = beta[d];
  RatMatrix a(t + 1, t + 1);
  for (unsigned i = 0; i < t; ++i) {
    Rat gap = beta[i] - last;
    if (sgn(gap) == 0)
      throw std::domain_error("build_ps_matrix: beta_i equals beta_{d+1}");
    a(i, i) = Rat(1) / gap;
    a(i, t) = -beta[i] / gap;
  }
  for (unsigned j = 0; j < t; ++j) a(t, j) = Rat(-1);
  a(t, t) = Rat(1);
  return a;
}

// Nonzero integer vector y with ||A y||_inf < 1, for 0 < |det A| < 1 (such a
// vector exists by Minkowski's theorem).  The columns of A are LLL-reduced
// first; in the reduced basis any solution has small coefficients even when A
// itself is skewed, so the interval-pruned depth-first scan stays cheap.
// Candidates at each depth are scanned outward from zero, which makes the
// returned vector a short one.  Deterministic; the first nonzero entry of the
// result is positive.  The budget counts visited search nodes.
inline std::vector<Int> find_small_image_vector(
    const RatMatrix& a, unsigned long long node_budget = 10000000ULL) {
  if (!a.is_square())
    throw std::invalid_argument("find_small_image_vector: matrix not square");
  Rat dt = det(a);
  if (sgn(dt) == 0 || abs(dt) >= 1)
    throw std::domain_error(
        "find_small_image_vector: need 0 < |det| < 1, got " + to_string(dt));
  std::size_t n = a.rows();
  RatMatrix b = a;
  std::vector<std::vector<Int>> u = lll_reduce_columns(b);

  // Any c with ||B c||_inf < 1 satisfies |c_i| <= row sums of |B^{-1}|.
  RatMatrix inv = inverse(b);
  std::vector<Int> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat row(0);
    for (std::size_t j = 0; j < n; ++j) row += abs(inv(i, j));
    bound[i] = ceil_rat(row) - 1;  // |c_i| < row, c_i integral
    if (bound[i] < 0) bound[i] = 0;
  }
  // radius[p][j]: largest possible |contribution| of coordinates p..n-1 to
  // row j.  Used to prune prefixes that cannot reach the open unit cube.
  std::vector<std::vector<Rat>> radius(n + 1, std::vector<Rat>(n, Rat(0)));
  for (std::size_t p = n; p-- > 0;)
    for (std::size_t j = 0; j < n; ++j)
      radius[p][j] = radius[p + 1][j] + abs(b(j, p)) * Rat(bound[p]);

  std::vector<Int> c(n);
  std::vector<Rat> sums(n);
  unsigned long long nodes = 0;
  auto rec = [&](auto&& self, std::size_t p, bool prefix_zero) -> bool {
    if (p == n) {
      if (prefix_zero) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (abs(sums[j]) >= 1) return false;
      return true;
    }
    // 0, 1, -1, 2, -2, ...: solutions cluster around the origin.
    for (Int v(0); abs(v) <= bound[p]; v = (v > 0 ? Int(-v) : Int(1 - v))) {
      if (++nodes > node_budget)
        throw budget_error("find_small_image_vector: node budget exhausted");
      bool feasible = true;
      for (std::size_t j = 0; j < n && feasible; ++j) {
        Rat base = sums[j] + b(j, p) * Rat(v);
        if (base - radius[p + 1][j] >= 1 || base + radius[p + 1][j] <= -1)
          feasible = false;
      }
      if (!feasible) continue;
      for (std::size_t j = 0; j < n; ++j) sums[j] += b(j, p) * Rat(v);
      c[p] = v;
      if (self(self, p + 1, prefix_zero && v == 0)) return true;
      for (std::size_t j = 0; j < n; ++j) sums[j] -= b(j, p) * Rat(v);
    }
    return false;
  };
  if (!rec(rec, 0, true))
    throw std::logic_error(
        "find_small_image_vector: no solution in box; precondition violated?");

  std::vector<Int> y(n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += u[i][j] * c[j];
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == 0) continue;
    if (y[i] < 0)
      for (auto& v : y) v = -v;
    break;
  }
  return y;
}

struct ImprovementWitness {
  unsigned t;
  Int m;                     // positive; sum of m_parts
  std::vector<Int> m_parts;  // m_1..m_t
  RatVec r;                  // rational combination of the t top vertices
  IntVec q;                  // (m+1)x - m r, the improved lattice point
  Rat old_gamma;
  Rat new_gamma;
};

// One step of the interior-point improvement: if the generalized product-sum
// inequality fails at some t, produces a strictly better interior point.
inline std::optional<ImprovementWitness> improve_point(const LatticeSimplex& s,
                                                       const IntVec& x) {
  if (!is_interior(s, x))
    throw std::domain_error("improve_point: x is not an interior lattice point");
  unsigned d = s.dimension();
  SortedBarycentric sb = sort_descending(barycentric(s, x));
  PsCheckReport rep = check_generalized(sb.beta);
  unsigned t = rep.first_violation();
  if (t == 0) return std::nullopt;

  RatMatrix a = build_ps_matrix(sb.beta, t);
  std::vector<Int> y = find_small_image_vector(a);
  Int m = y[t];
  if (m == 0)
    throw std::logic_error("improve_point: degenerate solution with m = 0");
  if (m < 0)
    for (auto& v : y) v = -v;
  m = y[t];

  std::vector<Int> m_parts(y.begin(), y.begin() + t);
  Int parts_sum(0);
  for (const Int& v : m_parts) parts_sum += v;
  if (parts_sum != m)
    throw std::logic_error("improve_point: m != m_1 + ... + m_t");

  RatVec r(d, Rat(0));
  IntVec q(d);
  for (unsigned c = 0; c < d; ++c) {
    Int acc = (m + 1) * x[c];
    for (unsigned i = 0; i < t; ++i) {
      const IntVec& v = s.vertices()[sb.vertex_order[i]];
      r[c] += make_rat(m_parts[i], m) * Rat(v[c]);
      acc -= m_parts[i] * v[c];
    }
    q[c] = acc;
  }

  Rat old_gamma = sb.beta[d];
  if (!is_interior(s, q))
    throw std::logic_error("improve_point: improved point not interior");
  Rat new_gamma = barycentric(s, q).min_entry();
  if (!(new_gamma > old_gamma))
    throw std::logic_error("improve_point: gamma did not increase");
  return ImprovementWitness{t, m, std::move(m_parts), std::move(r),
                            std::move(q), std::move(old_gamma),
                            std::move(new_gamma)};
}

}  // namespace latvol

#pragma once

#include <algorithm>
#include <optional>
#include <variant>

#include "latvol/roots.hpp"
#include "latvol/sylvester.hpp"

namespace latvol {

enum class ConstraintStatus { strict, tight, violated };

inline const char* to_string(ConstraintStatus s) {
  switch (s) {
    case ConstraintStatus::strict: return "strict";
    case ConstraintStatus::tight: return "tight";
    default: return "violated";
  }
}

// Status of every constraint of the minimization problem defining tau_d:
// sum 1, descending order with 1 >= beta_1 and beta_{d+1} >= 0, and the
// weakened product-sum constraints
//   prod_{i<=t}(beta_i - beta_{d+1})
//     <= sum_{j>t}(beta_j - beta_{d+1}) + (d+1) beta_{d+1}.
struct FeasibilityReport {
  bool feasible;
  bool sum_is_one;
  ConstraintStatus nonneg;            // beta_{d+1} >= 0
  std::vector<ConstraintStatus> ord;  // ord[0]: 1 >= beta_1; ord[t]: beta_t >= beta_{t+1}
  std::vector<ConstraintStatus> ps;   // ps[t-1] is the constraint at t, t = 1..d
};

namespace detail {
inline ConstraintStatus cmp_ge(const Rat& a, const Rat& b) {
  // status of the constraint a >= b
  if (a == b) return ConstraintStatus::tight;
  return a > b ? ConstraintStatus::strict : ConstraintStatus::violated;
}
}  // namespace detail

inline Rat ps_lhs(const BetaVector& beta, unsigned t) {
  std::size_t d = beta.size() - 1;
  Rat prod(1);
  for (unsigned i = 0; i < t; ++i) prod *= beta[i] - beta[d];
  return prod;
}

inline Rat ps_rhs(const BetaVector& beta, unsigned t) {
  std::size_t d = beta.size() - 1;
  Rat s(0);
  for (std::size_t j = t; j <= d; ++j) s += beta[j] - beta[d];
  return s + Rat(long(d) + 1) * beta[d];
}

inline FeasibilityReport is_feasible(const BetaVector& beta, unsigned d) {
  if (beta.size() != d + 1)
    throw std::domain_error("is_feasible: beta must have d+1 entries");
  FeasibilityReport rep;
  Rat sum(0);
  for (std::size_t i = 0; i <= d; ++i) sum += beta[i];
  rep.sum_is_one = (sum == 1);
  rep.nonneg = detail::cmp_ge(beta[d], Rat(0));
  rep.ord.resize(d + 1);
  rep.ord[0] = detail::cmp_ge(Rat(1), beta[0]);
  for (unsigned t = 1; t <= d; ++t)
    rep.ord[t] = detail::cmp_ge(beta[t - 1], beta[t]);
  rep.ps.resize(d);
  for (unsigned t = 1; t <= d; ++t)
    rep.ps[t - 1] = detail::cmp_ge(ps_rhs(beta, t), ps_lhs(beta, t));
  rep.feasible = rep.sum_is_one && rep.nonneg != ConstraintStatus::violated;
  for (const auto& s : rep.ord)
    if (s == ConstraintStatus::violated) rep.feasible = false;
  for (const auto& s : rep.ps)
    if (s == ConstraintStatus::violated) rep.feasible = false;
  return rep;
}

struct Lemma31Report {
  bool all_positive;                    // (a)
  std::vector<unsigned> both_tight_ts;  // (b): ts where ordering and product-sum are both tight
  unsigned tight_ps_prefix;             // longest l with constraints 1..l all tight
  bool prefix_matches_sylvester;        // (c): beta_i - beta_{d+1} = 1/s_i for i <= prefix

  bool never_both_tight() const { return both_tight_ts.empty(); }
};

// Structural facts that hold at feasible points (and in particular at every
// optimum): positivity, no simultaneous tightness, and the Sylvester pattern
// forced by a tight product-sum prefix.
inline Lemma31Report check_lemma31(const BetaVector& beta, unsigned d) {
  FeasibilityReport fr = is_feasible(beta, d);
  if (!fr.feasible)
    throw std::domain_error("check_lemma31: beta is not feasible");
  Lemma31Report rep;
  rep.all_positive = true;
  for (std::size_t i = 0; i <= d; ++i)
    if (sgn(beta[i]) <= 0) rep.all_positive = false;
  for (unsigned t = 1; t <= d; ++t)
    if (fr.ord[t] == ConstraintStatus::tight &&
        fr.ps[t - 1] == ConstraintStatus::tight)
      rep.both_tight_ts.push_back(t);
  rep.tight_ps_prefix = 0;
  while (rep.tight_ps_prefix < d &&
         fr.ps[rep.tight_ps_prefix] == ConstraintStatus::tight)
    ++rep.tight_ps_prefix;
  rep.prefix_matches_sylvester = true;
  for (unsigned i = 1; i <= rep.tight_ps_prefix; ++i)
    if (beta[i - 1] - beta[d] != make_rat(Int(1), sylvester(i)))
      rep.prefix_matches_sylvester = false;
  return rep;
}

// The objective restricted to the slice where beta_{d+1} = alpha lands in
// the l-th window:  f_l(alpha) = (prod_{i<l} (1/s_i + alpha))
//                                * (1/(s_l - 1) - d alpha) * alpha^{d-l}.
struct UnivariateProblem {
  unsigned d;
  unsigned ell;
  RatPoly poly;
  Rat lo, hi;
};

inline UnivariateProblem build_univariate(unsigned d, unsigned ell) {
  if (d < 1) throw std::domain_error("build_univariate: d must be >= 1");
  if (ell < 1 || ell > d)
    throw std::domain_error("build_univariate: ell out of [1, d]");
  RatPoly p = RatPoly::constant(Rat(1));
  for (unsigned i = 1; i < ell; ++i)
    p = p * RatPoly({make_rat(Int(1), sylvester(i)), Rat(1)});
  p = p * RatPoly({make_rat(Int(1), sylvester(ell) - 1), Rat(-long(d))});
  p = p * RatPoly::monomial(Rat(1), d - ell);
  Rat lo = make_rat(Int(1), Int(d + 1) * (sylvester(ell + 1) - 1));
  Rat hi = make_rat(Int(1), Int(d + 1) * (sylvester(ell) - 1));
  return {d, ell, std::move(p), std::move(lo), std::move(hi)};
}

struct UnivariateMinimum {
  unsigned ell;
  Rat min_lower, min_upper;  // certified bracket of the true minimum
  std::variant<Rat, RootEnclosure> attained_at;

  bool exact() const { return min_lower == min_upper; }
};

inline Rat default_tau_tolerance() {
  return make_rat(Int(1), int_pow(Int(10), 30));
}

// Certified global minimum of the window polynomial on [lo, hi]: exact
// values at the endpoints and at every rational critical point, certified
// enclosures (width <= tolerance) at irrational critical points.  No
// unimodality assumption.
inline UnivariateMinimum minimize_univariate(const UnivariateProblem& p,
                                             const Rat& tolerance) {
  if (sgn(tolerance) <= 0)
    throw std::domain_error("minimize_univariate: tolerance must be positive");
  struct Cand {
    Rat pos;
    Rat vlo, vhi;
    std::variant<Rat, RootEnclosure> where;
  };
  std::vector<Cand> cands;
  cands.push_back({p.lo, p.poly.eval(p.lo), p.poly.eval(p.lo), p.lo});
  cands.push_back({p.hi, p.poly.eval(p.hi), p.poly.eval(p.hi), p.hi});
  RatPoly dp = p.poly.derivative();
  if (!dp.is_zero() && dp.degree() >= 1) {
    for (RootEnclosure e : isolate_roots(dp, p.lo, p.hi)) {
      if (e.is_point()) {
        Rat v = p.poly.eval(e.lo);
        cands.push_back({e.lo, v, v, e.lo});
        continue;
      }
      RatInterval iv = interval_eval(p.poly, e.lo, e.hi);
      while (iv.hi - iv.lo > tolerance) {
        e = refine_enclosure(dp, e, e.width() / 2);
        if (e.is_point()) {
          Rat v = p.poly.eval(e.lo);
          iv = {v, v};
          break;
        }
        iv = interval_eval(p.poly, e.lo, e.hi);
      }
      cands.push_back({e.lo, iv.lo, iv.hi, e});
    }
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.pos < b.pos; });
  Rat lower = cands[0].vlo, upper = cands[0].vhi;
  for (const Cand& c : cands) {
    if (c.vlo < lower) lower = c.vlo;
    if (c.vhi < upper) upper = c.vhi;
  }
  for (const Cand& c : cands)
    if (c.vhi == upper)
      return {p.ell, lower, upper, c.where};
  throw std::logic_error("minimize_univariate: no attaining candidate");
}

// The slice point behind f_l: first l-1 entries 1/s_i + alpha, then
// 1/(s_l - 1) - d alpha, then alpha repeated.  Sums to exactly 1.
inline BetaVector reconstruct_beta(unsigned d, unsigned ell, const Rat& alpha) {
  UnivariateProblem p = build_univariate(d, ell);  // validates d, ell
  if (alpha < p.lo || alpha > p.hi)
    throw std::domain_error("reconstruct_beta: alpha outside the ell-window");
  std::vector<Rat> beta(d + 1);
  for (unsigned i = 1; i < ell; ++i)
    beta[i - 1] = make_rat(Int(1), sylvester(i)) + alpha;
  beta[ell - 1] = make_rat(Int(1), sylvester(ell) - 1) - Rat(long(d)) * alpha;
  for (unsigned i = ell; i <= d; ++i) beta[i] = alpha;
  return BetaVector(std::move(beta), true);
}

struct TauResult {
  unsigned d;
  Rat lower_bound;        // certified: tau_d >= lower_bound
  unsigned attaining_ell;
  BetaVector attaining_beta;
  bool is_exact;          // beta feasible and objective == lower_bound
};

inline Rat beta_objective(const BetaVector& beta) {
  Rat prod(1);
  for (std::size_t i = 0; i + 1 < beta.size(); ++i) prod *= beta[i];
  return prod;
}

// Certified lower bound for tau_d as the minimum over the d window minima.
// Deterministic tie-breaks: smallest ell, then leftmost candidate.
inline TauResult tau_lower_bound(unsigned d, const Rat& tolerance = default_tau_tolerance()) {
  if (d < 1) throw std::domain_error("tau_lower_bound: d must be >= 1");
  std::vector<UnivariateMinimum> mins;
  for (unsigned ell = 1; ell <= d; ++ell)
    mins.push_back(minimize_univariate(build_univariate(d, ell), tolerance));
  Rat lower = mins[0].min_lower, upper = mins[0].min_upper;
  for (const auto& m : mins) {
    if (m.min_lower < lower) lower = m.min_lower;
    if (m.min_upper < upper) upper = m.min_upper;
  }
  unsigned best_ell = 0;
  for (unsigned ell = 1; ell <= d && best_ell == 0; ++ell)
    if (mins[ell - 1].min_upper == upper) best_ell = ell;
  const UnivariateMinimum& best = mins[best_ell - 1];

  Rat alpha;
  bool alpha_exact = std::holds_alternative<Rat>(best.attained_at);
  if (alpha_exact)
    alpha = std::get<Rat>(best.attained_at);
  else
    alpha = std::get<RootEnclosure>(best.attained_at).midpoint();
  BetaVector beta = reconstruct_beta(d, best_ell, alpha);

  bool exact = (lower == upper) && alpha_exact &&
               is_feasible(beta, d).feasible && beta_objective(beta) == lower;
  return {d, lower, best_ell, std::move(beta), exact};
}

// 1/((d+1)(s_d - 1)^2): the closed-form lower bound for tau_d, proved for
// d >= 4 (lemma51_in_stated_range reports whether d is in that range).
inline Rat lemma51_bound(unsigned d) {
  if (d < 1) throw std::domain_error("lemma51_bound: d must be >= 1");
  Int sd1 = sylvester(d) - 1;
  return make_rat(Int(1), Int(d + 1) * sd1 * sd1);
}

inline bool lemma51_in_stated_range(unsigned d) { return d >= 4; }

struct GridOracleResult {
  Rat min_objective;  // upper envelope of tau_d
  BetaVector argmin;
  unsigned long long feasible_count;
  unsigned long long grid_count;
};

// Exhaustive scan of all descending rational vectors with entries in
// {0, 1/N, ..., 1} summing to 1 (integer compositions of N into d+1
// descending parts).  First strict minimum wins; parts are generated with
// c_1 descending, so larger leading entries are seen first.
inline GridOracleResult grid_oracle(unsigned d, unsigned steps,
                                    unsigned long long budget = 50000000ULL) {
  if (d < 1) throw std::domain_error("grid_oracle: d must be >= 1");
  if (steps < d + 1)
    throw std::domain_error("grid_oracle: need steps >= d+1");
  const long n = steps;
  std::vector<long> parts(d + 1);
  unsigned long long seen = 0, feasible = 0;
  std::optional<GridOracleResult> best;

  auto rec = [&](auto&& self, unsigned pos, long remaining, long cap) -> void {
    if (pos == d) {
      if (remaining > cap) return;
      parts[d] = remaining;
      if (++seen > budget)
        throw budget_error("grid_oracle: composition budget exhausted");
      std::vector<Rat> v(d + 1);
      for (unsigned i = 0; i <= d; ++i) v[i] = make_rat(parts[i], n);
      BetaVector beta(std::move(v), true);
      if (!is_feasible(beta, d).feasible) return;
      ++feasible;
      Rat obj = beta_objective(beta);
      if (!best || obj < best->min_objective)
        best = GridOracleResult{obj, beta, 0, 0};
      return;
    }
    long lo_part = (remaining + long(d - pos)) / long(d + 1 - pos);  // ceil
    for (long c = std::min<long>(cap, remaining); c >= lo_part; --c) {
      parts[pos] = c;
      self(self, pos + 1, remaining - c, c);
    }
  };
  rec(rec, 0, n, n);
  if (!best)
    throw std::logic_error("grid_oracle: no feasible grid point found");
  best->feasible_count = feasible;
  best->grid_count = seen;
  return *best;
}

}  // namespace latvol

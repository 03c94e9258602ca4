#pragma once

#include <functional>
#include <sstream>

#include "latvol/bounds.hpp"
#include "latvol/corpus.hpp"
#include "latvol/prodsum.hpp"

namespace latvol {

struct VerifyConfig {
  unsigned max_dim = 3;
  unsigned long long seed = 12345;
  unsigned corpus_budget = 200;  // number of random simplices examined
  bool corrupt_oracle_selftest = false;  // deliberately break one oracle
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string witness;  // empty when the check passed
};

struct VerifyAllReport {
  std::vector<CheckResult> checks;
  bool all_pass;
  bool no_checks_run;
};

namespace detail {

inline void run_check(std::vector<CheckResult>& out, const std::string& name,
                      const std::function<std::optional<std::string>()>& body) {
  try {
    std::optional<std::string> w = body();
    out.push_back({name, !w.has_value(), w.value_or("")});
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

inline std::string point_str(const IntVec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

}  // namespace detail

// Re-derives frozen values through independent second paths and replays the
// structural theorems over a seeded random corpus.  Every failure carries a
// concrete witness; checks stop at their first witness.
inline VerifyAllReport verify_all(const VerifyConfig& cfg = {}) {
  VerifyAllReport rep;
  if (cfg.max_dim == 0) {
    rep.all_pass = true;
    rep.no_checks_run = true;
    return rep;
  }
  auto& checks = rep.checks;
  using detail::run_check;

  run_check(checks, "sylvester-recurrence", [&]() -> std::optional<std::string> {
    Int prod(1);
    for (long i = 1; i <= 8; ++i) {
      Int expect = (i == 1) ? Int(2) : Int(prod + 1);
      if (cfg.corrupt_oracle_selftest && i == 4) expect += 1;
      if (sylvester(i) != expect)
        return "s_" + std::to_string(i) + ": cached " + sylvester(i).get_str() +
               " vs independent recurrence " + expect.get_str();
      prod *= expect;
    }
    return std::nullopt;
  });

  run_check(checks, "sylvester-unit-identity", [&]() -> std::optional<std::string> {
    Rat sum(0);
    Int prod(1);
    for (long i = 1; i <= 8; ++i) {
      sum += make_rat(Int(1), sylvester(i));
      prod *= sylvester(i);
      if (sum + make_rat(Int(1), prod) != 1)
        return "identity fails at length " + std::to_string(i);
    }
    return std::nullopt;
  });

  run_check(checks, "witness-interior-count", [&]() -> std::optional<std::string> {
    for (unsigned d = 1; d <= std::min(cfg.max_dim, 4u); ++d)
      for (long k = 1; k <= 3; ++k) {
        auto pts = interior_points(zpw_simplex(d, k));
        if (pts.size() != (std::size_t)k)
          return "witness simplex d=" + std::to_string(d) + " k=" +
                 std::to_string(k) + ": expected " + std::to_string(k) +
                 " interior points, found " + std::to_string(pts.size());
      }
    return std::nullopt;
  });

  run_check(checks, "witness-volume-formula", [&]() -> std::optional<std::string> {
    for (unsigned d = 1; d <= cfg.max_dim; ++d)
      for (long k = 1; k <= 3; ++k) {
        Int sd1 = sylvester(d) - 1;
        Rat expect = make_rat(Int(k + 1) * sd1 * sd1, factorial(d));
        if (volume(zpw_simplex(d, k)) != expect || zpw_volume(d, k) != expect)
          return "witness simplex d=" + std::to_string(d) +
                 " k=" + std::to_string(k) + ": volume mismatch";
      }
    return std::nullopt;
  });

  // seeded corpus with precomputed interior data, shared by the checks below
  struct Member {
    LatticeSimplex s;
    std::vector<IntVec> interior;
    MaxMinResult maxmin;
  };
  std::vector<Member> corpus;
  bool corpus_ok = false;
  run_check(checks, "corpus-generation", [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(cfg.seed);
    for (unsigned i = 0; i < cfg.corpus_budget; ++i) {
      LatticeSimplex s = random_interior_simplex(rng, 1 + i % cfg.max_dim);
      auto pts = interior_points(s);
      if (pts.empty()) return "corpus member without interior points";
      MaxMinResult mm = maxmin_point(s);
      corpus.push_back({std::move(s), std::move(pts), std::move(mm)});
    }
    corpus_ok = true;
    return std::nullopt;
  });

  run_check(checks, "barycentric-reconstruction", [&]() -> std::optional<std::string> {
    if (!corpus_ok) return "corpus unavailable";
    for (std::size_t m = 0; m < corpus.size(); ++m) {
      const auto& s = corpus[m].s;
      unsigned d = s.dimension();
      const IntVec& p = corpus[m].interior.front();
      BetaVector beta = barycentric(s, p);
      Rat sum(0);
      for (std::size_t i = 0; i <= d; ++i) sum += beta[i];
      if (sum != 1)
        return "member " + std::to_string(m) + ": coordinates sum to " +
               to_string(sum);
      for (unsigned c = 0; c < d; ++c) {
        Rat coord(0);
        for (std::size_t i = 0; i <= d; ++i)
          coord += beta[i] * Rat(s.vertices()[i][c]);
        if (coord != Rat(p[c]))
          return "member " + std::to_string(m) + ": point " +
                 detail::point_str(p) + " not reconstructed";
      }
    }
    return std::nullopt;
  });

  run_check(checks, "interior-coordinate-positivity", [&]() -> std::optional<std::string> {
    if (!corpus_ok) return "corpus unavailable";
    for (std::size_t m = 0; m < corpus.size(); ++m) {
      for (const IntVec& p : corpus[m].interior) {
        if (!is_interior(corpus[m].s, p))
          return "member " + std::to_string(m) + ": listed point " +
                 detail::point_str(p) + " not interior";
        BetaVector beta = barycentric(corpus[m].s, p);
        if (sgn(beta.min_entry()) <= 0)
          return "member " + std::to_string(m) + ": nonpositive coordinate at " +
                 detail::point_str(p);
      }
    }
    return std::nullopt;
  });

  run_check(checks, "interior-enumeration-rescan", [&]() -> std::optional<std::string> {
    if (!corpus_ok) return "corpus unavailable";
    // full box rescan with rational coordinates on a slice of the corpus
    for (std::size_t m = 0; m < corpus.size() && m < 24; ++m) {
      const auto& s = corpus[m].s;
      unsigned d = s.dimension();
      if (d > 3) continue;  // box scan cost grows too fast beyond this
      IntVec lo(d), hi(d);
      for (unsigned c = 0; c < d; ++c) {
        lo[c] = hi[c] = s.vertices()[0][c];
        for (const IntVec& v : s.vertices()) {
          if (v[c] < lo[c]) lo[c] = v[c];
          if (v[c] > hi[c]) hi[c] = v[c];
        }
      }
      std::vector<IntVec> found;
      IntVec p = lo;
      for (;;) {
        RatVec rp(d);
        for (unsigned c = 0; c < d; ++c) rp[c] = Rat(p[c]);
        BetaVector beta = barycentric(s, rp);
        if (sgn(beta.min_entry()) > 0) found.push_back(p);
        unsigned c = d;
        while (c > 0 && p[c - 1] == hi[c - 1]) {
          --c;
          p[c] = lo[c];
        }
        if (c == 0) break;
        p[c - 1] += 1;
      }
      if (found != corpus[m].interior)
        return "member " + std::to_string(m) + ": enumeration disagrees with rescan (" +
               std::to_string(corpus[m].interior.size()) + " vs " +
               std::to_string(found.size()) + " points)";
    }
    return std::nullopt;
  });

  run_check(checks, "maxmin-satisfies-generalized", [&]() -> std::optional<std::string> {
    if (!corpus_ok) return "corpus unavailable";
    for (std::size_t m = 0; m < corpus.size(); ++m) {
      PsCheckReport ps = check_generalized(corpus[m].maxmin.beta);
      if (!ps.all_hold())
        return "member " + std::to_string(m) + ": violation at t=" +
               std::to_string(ps.first_violation()) + " for point " +
               detail::point_str(corpus[m].maxmin.point);
    }
    return std::nullopt;
  });

  run_check(checks, "improvement-progress", [&]() -> std::optional<std::string> {
    if (!corpus_ok) return "corpus unavailable";
    for (std::size_t m = 0; m < corpus.size(); ++m) {
      const auto& s = corpus[m].s;
      IntVec x = corpus[m].interior.front();
      Rat gamma = sort_descending(barycentric(s, x)).beta[s.dimension()];
      for (int step = 0; ; ++step) {
        if (step > 500)
          return "member " + std::to_string(m) + ": no fixed point in 500 steps";
        auto w = improve_point(s, x);
        if (!w) break;
        if (w->new_gamma <= gamma)
          return "member " + std::to_string(m) + ": gamma did not increase (" +
                 to_string(gamma) + " -> " + to_string(w->new_gamma) + ")";
        gamma = w->new_gamma;
        x = w->q;
      }
      if (!check_generalized(sort_descending(barycentric(s, x)).beta).all_hold())
        return "member " + std::to_string(m) +
               ": fixed point violates the generalized inequalities";
    }
    return std::nullopt;
  });

  run_check(checks, "volume-bound-at-maxmin", [&]() -> std::optional<std::string> {
    if (!corpus_ok) return "corpus unavailable";
    for (std::size_t m = 0; m < corpus.size(); ++m) {
      VolumeBoundCheck c =
          check_pikhurko_volume_bound(corpus[m].s, corpus[m].maxmin.point);
      if (!c.holds)
        return "member " + std::to_string(m) + ": volume " + to_string(c.volume) +
               " exceeds bound " + to_string(c.bound);
    }
    return std::nullopt;
  });

  run_check(checks, "small-image-solver", [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
    for (int it = 0; it < 20; ++it) {
      std::size_t n = 1 + it % 3;
      RatMatrix a(n, n);
      Rat dt(0);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            a(i, j) = make_rat(corpus_draw(rng, -9, 9), corpus_draw(rng, 1, 9));
        dt = det(a);
      } while (sgn(dt) == 0);
      if (abs(dt) >= 1) {
        Int scale = ceil_rat(abs(dt)) + 1;
        for (std::size_t j = 0; j < n; ++j) a(0, j) /= Rat(scale);
      }
      std::vector<Int> y = find_small_image_vector(a, 100000000ULL);
      bool zero = true;
      for (const Int& v : y) zero = zero && v == 0;
      if (zero) return "iteration " + std::to_string(it) + ": zero vector returned";
      for (std::size_t i = 0; i < n; ++i) {
        Rat row(0);
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * Rat(y[j]);
        if (abs(row) >= 1)
          return "iteration " + std::to_string(it) + ": |row " +
                 std::to_string(i) + "| = " + to_string(abs(row)) + " >= 1";
      }
    }
    return std::nullopt;
  });

  run_check(checks, "tau-frozen-values", [&]() -> std::optional<std::string> {
    const Rat expect[] = {make_rat(Int(1), Int(2)), make_rat(Int(1), Int(9)),
                          make_rat(Int(13), Int(1536))};
    for (unsigned d = 1; d <= std::min(cfg.max_dim, 3u); ++d) {
      TauResult r = tau_lower_bound(d);
      if (!r.is_exact || r.lower_bound != expect[d - 1])
        return "d=" + std::to_string(d) + ": got " + to_string(r.lower_bound) +
               ", expected " + to_string(expect[d - 1]);
    }
    return std::nullopt;
  });

  run_check(checks, "tau-grid-consistency", [&]() -> std::optional<std::string> {
    const unsigned steps[] = {8, 9, 12};
    for (unsigned d = 1; d <= std::min(cfg.max_dim, 3u); ++d) {
      GridOracleResult g = grid_oracle(d, steps[d - 1]);
      Rat lb = tau_lower_bound(d).lower_bound;
      if (g.min_objective < lb)
        return "d=" + std::to_string(d) + ": grid minimum " +
               to_string(g.min_objective) + " below certified bound " + to_string(lb);
    }
    return std::nullopt;
  });

  run_check(checks, "bound-orderings", [&]() -> std::optional<std::string> {
    for (unsigned d = 2; d <= 6; ++d)
      for (long k = 1; k <= 2; ++k) {
        BoundsReport r = make_bounds_report(d, k);
        if (!(r.zpw_volume <= *r.thm32 && *r.thm32 <= r.thm12 &&
              r.thm12 < r.pikhurko_old && r.thm15a < r.zpw_volume))
          return "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                 ": ordering violated";
      }
    return std::nullopt;
  });

  run_check(checks, "root-certification", [&]() -> std::optional<std::string> {
    // (x^2 - 2)(x - 1) on [0, 2]: one exact rational root, one irrational
    RatPoly p = RatPoly({Rat(-2), Rat(0), Rat(1)}) * RatPoly({Rat(-1), Rat(1)});
    auto rs = isolate_roots(p, Rat(0), Rat(2));
    if (rs.size() != 2) return "expected 2 roots, found " + std::to_string(rs.size());
    if (!rs[0].is_point() || rs[0].lo != 1) return "rational root 1 not certified";
    if (rs[1].is_point() || rs[1].lo * rs[1].lo > 2 || rs[1].hi * rs[1].hi < 2)
      return "enclosure does not pin sqrt(2)";
    auto rs2 = isolate_roots(RatPoly({Rat(-3), Rat(0), Rat(1)}), Rat(-2), Rat(2));
    if (rs2.size() != 2 || rs2[0].is_point() || rs2[1].is_point())
      return "sqrt(3) pair not isolated";
    return std::nullopt;
  });

  rep.no_checks_run = checks.empty();
  rep.all_pass = true;
  for (const auto& c : checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace latvol

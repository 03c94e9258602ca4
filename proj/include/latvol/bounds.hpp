#pragma once

#include <cstdio>
#include <optional>
#include <string>

#include "latvol/tau.hpp"

namespace latvol {

namespace detail {
inline void require_dim_k(unsigned d, const Int& k, const char* who) {
  if (d < 1) throw std::domain_error(std::string(who) + ": d must be >= 1");
  if (k < 1) throw std::domain_error(std::string(who) + ": k must be >= 1");
}

inline std::string format_log10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}
}  // namespace detail

// k (d+1) (s_d - 1)^2 / d! -- the sharp volume bound for lattice simplices
// with k >= 1 interior lattice points (d >= 2; also valid at d = 1).
inline Rat theorem12_bound(unsigned d, const Int& k) {
  detail::require_dim_k(d, k, "theorem12_bound");
  Int sd1 = sylvester(d) - 1;
  return make_rat(k * Int(d + 1) * sd1 * sd1, factorial(d));
}

// k / (d! tau): valid for any positive lower bound tau on tau_d.
inline Rat theorem32_bound(unsigned d, const Int& k, const Rat& tau_lower) {
  detail::require_dim_k(d, k, "theorem32_bound");
  if (sgn(tau_lower) <= 0)
    throw std::domain_error("theorem32_bound: tau lower bound must be positive");
  return Rat(k) / (Rat(factorial(d)) * tau_lower);
}

// k 2^(3d-2) 15^((d-1) 2^(d+1)) / d! -- the previously best known bound,
// kept for comparison.  Exact evaluation only while the tower exponent is
// moderate; beyond that the number has millions of digits.
inline Rat pikhurko_old_bound(unsigned d, const Int& k) {
  detail::require_dim_k(d, k, "pikhurko_old_bound");
  Int e = Int(d - 1) << (d + 1);
  if (e > 1000000)
    throw std::domain_error(
        "pikhurko_old_bound: exponent too large for exact evaluation");
  Int num = k * int_pow(Int(2), 3 * d - 2) *
            int_pow(Int(15), e.get_ui());
  return make_rat(num, factorial(d));
}

// 1/((d+1)(s_{d+1} - 1)): simplices of normalized volume below this
// threshold have no interior lattice points at all.
inline Rat thm15a_threshold(unsigned d) {
  if (d < 1) throw std::domain_error("thm15a_threshold: d must be >= 1");
  return make_rat(Int(1), Int(d + 1) * (sylvester(d + 1) - 1));
}

// (d (2d+1) (s_{2d+1} - 1))^d k: bound for the (d* = 2d+1)-dimensional
// barycentric construction; always an integer.
inline Int thm15b_bound(unsigned d, const Int& k) {
  detail::require_dim_k(d, k, "thm15b_bound");
  Int base = Int(d) * Int(2 * d + 1) * (sylvester(2 * d + 1) - 1);
  return int_pow(base, d) * k;
}

struct LiteratureValue {
  std::string label;
  Rat value;
};

// Known sharp or previously published values for comparison columns.
inline std::vector<LiteratureValue> literature_bounds(unsigned d, const Int& k) {
  detail::require_dim_k(d, k, "literature_bounds");
  std::vector<LiteratureValue> out;
  if (d == 2) {
    if (k == 1)
      out.push_back({"Scott planar sharp value", make_rat(Int(9), Int(2))});
    else
      out.push_back({"Scott planar", Rat(2) * Rat(Int(k + 1))});
  } else if (d == 3) {
    // published to three decimal places; stored verbatim as 14106/1000 * k
    out.push_back({"Pikhurko dimension-3 reported value",
                   make_rat(Int(14106) * k, Int(1000))});
  }
  return out;
}

struct BoundsReport {
  unsigned d;
  Int k;
  Rat zpw_volume;  // volume of the k-point witness simplex
  Rat thm12;
  Rat ratio;  // thm12 / zpw_volume == k(d+1)/(k+1)
  std::optional<Rat> thm32;
  std::string tau_source;  // "computed" or "lemma51"
  Rat pikhurko_old;
  std::string pikhurko_old_log10;
  Rat thm15a;
  Int thm15b;
  std::string thm15b_log10;
  std::vector<LiteratureValue> literature;
};

inline BoundsReport make_bounds_report(unsigned d, const Int& k) {
  detail::require_dim_k(d, k, "make_bounds_report");
  BoundsReport rep;
  rep.d = d;
  rep.k = k;
  Int sd1 = sylvester(d) - 1;
  rep.zpw_volume = make_rat(Int((k + 1) * sd1 * sd1), factorial(d));
  rep.thm12 = theorem12_bound(d, k);
  rep.ratio = rep.thm12 / rep.zpw_volume;
  if (d <= 6) {
    rep.tau_source = "computed";
    rep.thm32 = theorem32_bound(d, k, tau_lower_bound(d).lower_bound);
  } else {
    rep.tau_source = "lemma51";
    rep.thm32 = theorem32_bound(d, k, lemma51_bound(d));
  }
  rep.pikhurko_old = pikhurko_old_bound(d, k);
  rep.pikhurko_old_log10 = detail::format_log10(log10_rat(rep.pikhurko_old));
  rep.thm15a = thm15a_threshold(d);
  rep.thm15b = thm15b_bound(d, k);
  rep.thm15b_log10 = detail::format_log10(log10_rat(Rat(rep.thm15b)));
  rep.literature = literature_bounds(d, k);
  return rep;
}

}  // namespace latvol

#pragma once

#include <mutex>

#include "latvol/simplex.hpp"

namespace latvol {

// Memoized values of the doubly exponential sequence 2, 3, 7, 43, 1807, ...
// where each term is one more than the product of all previous terms
// (equivalently s_{i+1} = s_i^2 - s_i + 1).  Prefix products are kept
// alongside since the unit-fraction identity needs them.
class SylvesterCache {
 public:
  SylvesterCache() : vals_{Int(2)}, prods_{Int(2)} {}

  // 1-based: get(1) = 2.
  const Int& get(long i) {
    if (i <= 0) throw std::domain_error("SylvesterCache: index must be >= 1");
    while (static_cast<long>(vals_.size()) < i) {
      Int next = prods_.back() + 1;
      vals_.push_back(next);
      prods_.push_back(prods_.back() * next);
    }
    return vals_[i - 1];
  }

  // s_1 * s_2 * ... * s_i.
  const Int& product_through(long i) {
    get(i);
    return prods_[i - 1];
  }

 private:
  std::vector<Int> vals_;
  std::vector<Int> prods_;
};

namespace detail {
inline SylvesterCache& global_sylvester_cache(std::unique_lock<std::mutex>& lk) {
  static std::mutex mu;
  static SylvesterCache cache;
  lk = std::unique_lock<std::mutex>(mu);
  return cache;
}
}  // namespace detail

inline Int sylvester(long i) {
  std::unique_lock<std::mutex> lk;
  return detail::global_sylvester_cache(lk).get(i);
}

inline Int sylvester_product(long i) {
  std::unique_lock<std::mutex> lk;
  return detail::global_sylvester_cache(lk).product_through(i);
}

// 1/s_1 + ... + 1/s_ell + 1/(s_1...s_ell); equals 1 for every ell >= 1.
inline Rat sylvester_unit_identity(long ell) {
  if (ell <= 0) throw std::domain_error("sylvester_unit_identity: ell must be >= 1");
  Rat sum(0);
  for (long i = 1; i <= ell; ++i) sum += make_rat(Int(1), sylvester(i));
  sum += make_rat(Int(1), sylvester_product(ell));
  return sum;
}

// Simplex conv(0, s_1 e_1, ..., s_{d-1} e_{d-1}, (k+1)(s_d - 1) e_d): the
// conjectured volume maximizer among lattice d-simplices with exactly k
// interior lattice points.
inline LatticeSimplex zpw_simplex(long d, long k) {
  if (d <= 0) throw std::domain_error("zpw_simplex: d must be >= 1");
  if (k <= 0) throw std::domain_error("zpw_simplex: k must be >= 1");
  unsigned ud = static_cast<unsigned>(d);
  std::vector<IntVec> verts(ud + 1, IntVec(ud, Int(0)));
  for (long i = 1; i < d; ++i) verts[i][i - 1] = sylvester(i);
  verts[ud][ud - 1] = Int(k + 1) * (sylvester(d) - 1);
  return LatticeSimplex(ud, std::move(verts));
}

// (k+1)(s_d - 1)^2 / d!
inline Rat zpw_volume(long d, long k) {
  if (d <= 0) throw std::domain_error("zpw_volume: d must be >= 1");
  if (k <= 0) throw std::domain_error("zpw_volume: k must be >= 1");
  Int sd1 = sylvester(d) - 1;
  return make_rat(Int(k + 1) * sd1 * sd1, factorial(static_cast<unsigned long>(d)));
}

}  // namespace latvol

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace latvol {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

inline std::string to_string(const Int& z) { return z.get_str(); }

// Canonical rendering: "p/q" with gcd(p,q)=1, q>0; integers render without
// the "/1" part.
inline std::string to_string(const Rat& q) { return q.get_str(); }

namespace detail {
inline bool is_decimal_digits(const std::string& s, std::size_t from,
                              std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace detail

inline Int parse_int(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (!detail::is_decimal_digits(s, start, s.size()))
    throw std::invalid_argument("parse_int: not an integer: '" + s + "'");
  // mpz rejects a leading '+'.
  return s[0] == '+' ? Int(s.substr(1), 10) : Int(s, 10);
}

// Accepts "p" or "p/q" in base 10; rejects anything else.
inline Rat parse_rat(const std::string& s) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den <= 0)
    throw std::invalid_argument("parse_rat: denominator must be positive: '" +
                                s + "'");
  return make_rat(num, den);
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  return make_rat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Rational with the smallest denominator in [lo, hi] (ties resolved toward
// the value nearest zero).  Stern-Brocot / continued-fraction descent.
inline Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo == hi) return lo;
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  if (sgn(hi) < 0) {
    Rat r = simplest_rational_in(-hi, -lo);
    return -r;
  }
  // 0 < lo < hi.
  Int cl = ceil_rat(lo);
  if (Rat(cl) <= hi) return Rat(cl);
  Int fl = floor_rat(lo);
  Rat fl_q(fl);
  // Both endpoints lie strictly inside (fl, fl+1).
  Rat inner = simplest_rational_in(Rat(1) / (hi - fl_q), Rat(1) / (lo - fl_q));
  return fl_q + Rat(1) / inner;
}

namespace detail {
inline double log10_int(const Int& z) {
  // z > 0.  mantissa in [0.5, 1), z = mantissa * 2^e2.
  long e2 = 0;
  double m = mpz_get_d_2exp(&e2, z.get_mpz_t());
  return std::log10(m) + static_cast<double>(e2) * 0.30102999566398119521;
}
}  // namespace detail

// Approximate base-10 logarithm of a positive rational, usable far beyond
// double range.
inline double log10_rat(const Rat& q) {
  if (sgn(q) <= 0) throw std::domain_error("log10_rat: value must be positive");
  return detail::log10_int(q.get_num()) - detail::log10_int(q.get_den());
}

}  // namespace latvol

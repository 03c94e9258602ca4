#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latvol/rational.hpp"

namespace latvol {

// Dense univariate polynomial over the rationals.  coeff(i) multiplies x^i;
// the coefficient vector never has a trailing zero, so the zero polynomial is
// the empty vector and degree() is -1 for it.
class RatPoly {
 public:
  RatPoly() = default;

  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPoly constant(const Rat& c) { return RatPoly({c}); }

  static RatPoly monomial(const Rat& coeff, std::size_t power) {
    std::vector<Rat> c(power + 1);
    c[power] = coeff;
    return RatPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const {
    if (c_.empty()) throw std::domain_error("leading: zero polynomial");
    return c_.back();
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(long(i)) * c_[i];
    return RatPoly(std::move(d));
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(c));
  }

  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(c));
  }

  friend RatPoly operator-(const RatPoly& a) {
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return RatPoly(std::move(c));
  }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }

  friend RatPoly operator*(const Rat& s, const RatPoly& a) {
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return RatPoly(std::move(c));
  }

  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

// Quotient and remainder with deg(rem) < deg(b).
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rat> quot(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rat f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

// Scales by a positive rational so coefficients become coprime integers.
// The sign pattern is unchanged.
inline RatPoly integer_primitive(const RatPoly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const Rat& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Int g(0);
  for (const Rat& c : p.coeffs()) {
    Rat v = c * Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  return make_rat(l, g) * p;
}

// Primitive gcd with positive leading coefficient; gcd(0,0) is 0.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  RatPoly g = integer_primitive(a);
  if (sgn(g.leading()) < 0) g = -g;
  return g;
}

// p with repeated roots collapsed to simple ones: p / gcd(p, p').  The sign
// of the leading coefficient matches p's.
inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return p;
  RatPoly g = poly_gcd(p, p.derivative());
  auto [q, r] = divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact division");
  return q;
}

}  // namespace latvol

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latvol/errors.hpp"
#include "latvol/rational.hpp"

namespace latvol {

// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("RatMatrix: empty dimension");
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("RatMatrix multiply: shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

// Fraction-free Bareiss elimination.  Exact divisions only; no fractions are
// ever formed, which keeps intermediate entries small.
inline Int det_int(std::vector<Int> m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("det_int: empty matrix");
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

// det via Bareiss after clearing each row's denominators.
inline Rat det(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det: matrix not square");
  std::size_t n = a.rows();
  std::vector<Int> m(n * n);
  Int scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = a(i, j) * Rat(l);
      m[i * n + j] = v.get_num();  // den is 1 by construction
    }
    scale *= l;
  }
  return make_rat(det_int(std::move(m), n), scale);
}

// Exact Gaussian elimination with back substitution.
inline std::vector<Rat> solve_linear(const RatMatrix& a,
                                     const std::vector<Rat>& b) {
  if (!a.is_square())
    throw std::invalid_argument("solve_linear: matrix not square");
  std::size_t n = a.rows();
  if (b.size() != n)
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  RatMatrix w = a;
  std::vector<Rat> rhs = b;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(w(p, k)) == 0) ++p;
    if (p == n) throw singular_matrix_error("solve_linear: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      std::swap(rhs[k], rhs[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(w(i, k)) == 0) continue;
      Rat f = w(i, k) / w(k, k);
      w(i, k) = 0;
      for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= f * w(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rat s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= w(k, j) * x[j];
    x[k] = s / w(k, k);
  }
  return x;
}

// Gauss-Jordan inverse.
inline RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = a.rows();
  RatMatrix w = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(w(p, k)) == 0) ++p;
    if (p == n) throw singular_matrix_error("inverse: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(k, j), w(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = w(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      w(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(w(i, k)) == 0) continue;
      Rat f = w(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

inline std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<Rat> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

// Lenstra-Lenstra-Lovasz reduction (delta = 3/4) of the lattice generated by
// the columns of b, in exact arithmetic.  Returns the unimodular transform u
// with  b_out = b_in * u.  Gram-Schmidt data is recomputed from scratch after
// every column operation: wasteful, but the matrices here never exceed a
// handful of columns and exactness trumps speed.
inline std::vector<std::vector<Int>> lll_reduce_columns(RatMatrix& b) {
  if (!b.is_square())
    throw std::invalid_argument("lll_reduce_columns: matrix not square");
  std::size_t n = b.cols();
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  std::vector<std::vector<Rat>> gs(n, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
  std::vector<Rat> norm2(n);
  auto recompute = [&] {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) gs[k][i] = b(i, k);
      for (std::size_t j = 0; j < k; ++j) {
        Rat num(0);
        for (std::size_t i = 0; i < n; ++i) num += b(i, k) * gs[j][i];
        mu[k][j] = num / norm2[j];
        for (std::size_t i = 0; i < n; ++i) gs[k][i] -= mu[k][j] * gs[j][i];
      }
      norm2[k] = Rat(0);
      for (std::size_t i = 0; i < n; ++i) norm2[k] += gs[k][i] * gs[k][i];
      if (sgn(norm2[k]) == 0)
        throw std::domain_error("lll_reduce_columns: dependent columns");
    }
  };

  recompute();
  const Rat delta = make_rat(3, 4);
  const Rat half = make_rat(1, 2);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Int r = floor_rat(mu[k][j] + half);
      if (r == 0) continue;
      for (std::size_t i = 0; i < n; ++i) b(i, k) -= Rat(r) * b(i, j);
      for (std::size_t i = 0; i < n; ++i) u[i][k] -= r * u[i][j];
      recompute();
    }
    if (norm2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        std::swap(b(i, k), b(i, k - 1));
        std::swap(u[i][k], u[i][k - 1]);
      }
      recompute();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return u;
}

}  // namespace latvol

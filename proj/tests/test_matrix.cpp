#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latvol/matrix.hpp"

using namespace latvol;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return make_rat(num(rng), den(rng));
}

RatMatrix rnd_matrix(std::mt19937_64& rng, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rnd_rat(rng);
  return m;
}

// Independent oracle: cofactor expansion along the first row.
Rat det_cofactor(const RatMatrix& a) {
  std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rat s(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a(0, j)) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    Rat term = a(0, j) * det_cofactor(minor);
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

}  // namespace

TEST_CASE("det on fixed matrices") {
  CHECK(det(RatMatrix::identity(3)) == Rat(1));

  RatMatrix a(2, 2);
  a(0, 0) = make_rat(5, 3);
  a(0, 1) = make_rat(-4, 3);
  a(1, 0) = Rat(-1);
  a(1, 1) = Rat(1);
  CHECK(det(a) == make_rat(1, 3));

  RatMatrix s(2, 2);
  s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
  CHECK(det(s) == Rat(0));

  RatMatrix ns(2, 3);
  CHECK_THROWS_AS(det(ns), std::invalid_argument);
}

TEST_CASE("det_int via Bareiss") {
  CHECK(det_int({Int(2), Int(0), Int(0), Int(4)}, 2) == 8);
  // Row swap path.
  CHECK(det_int({Int(0), Int(1), Int(1), Int(0)}, 2) == -1);
  // 3x3 with a zero pivot partway.
  std::vector<Int> m = {Int(1), Int(2), Int(3),
                        Int(2), Int(4), Int(5),
                        Int(3), Int(5), Int(6)};
  CHECK(det_int(m, 3) == -1);
}

TEST_CASE("det agrees with cofactor expansion and is multiplicative") {
  std::mt19937_64 rng(7010);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 1 + rep % 4;
    RatMatrix a = rnd_matrix(rng, n), b = rnd_matrix(rng, n);
    CHECK(det(a) == det_cofactor(a));
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("solve_linear on fixed systems") {
  RatMatrix d(2, 2);
  d(0, 0) = 2; d(1, 1) = 4;
  auto x = solve_linear(d, {Rat(1), Rat(1)});
  CHECK(x == std::vector<Rat>{make_rat(1, 2), make_rat(1, 4)});

  auto y = solve_linear(RatMatrix::identity(3), {Rat(3), Rat(5), Rat(-2)});
  CHECK(y == std::vector<Rat>{Rat(3), Rat(5), Rat(-2)});

  RatMatrix s(2, 2);
  s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
  CHECK_THROWS_AS(solve_linear(s, {Rat(1), Rat(1)}), singular_matrix_error);
  CHECK_THROWS_AS(solve_linear(d, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("solve_linear multiply-back is exact") {
  std::mt19937_64 rng(7011);
  int done = 0;
  while (done < 100) {
    std::size_t n = 1 + done % 5;
    RatMatrix a = rnd_matrix(rng, n);
    if (sgn(det(a)) == 0) continue;
    std::vector<Rat> b(n);
    for (auto& v : b) v = rnd_rat(rng);
    auto x = solve_linear(a, b);
    CHECK(mat_vec(a, x) == b);
    ++done;
  }
}

TEST_CASE("inverse round-trips") {
  std::mt19937_64 rng(7012);
  int done = 0;
  while (done < 40) {
    std::size_t n = 1 + done % 4;
    RatMatrix a = rnd_matrix(rng, n);
    if (sgn(det(a)) == 0) continue;
    CHECK(a * inverse(a) == RatMatrix::identity(n));
    ++done;
  }
  RatMatrix s(2, 2);
  s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
  CHECK_THROWS_AS(inverse(s), singular_matrix_error);
}

TEST_CASE("lll_reduce_columns: skewed basis of Z^2 comes back short") {
  RatMatrix b(2, 2);
  b(0, 0) = 1; b(0, 1) = 1000;
  b(1, 0) = 0; b(1, 1) = 1;
  RatMatrix orig = b;
  auto u = lll_reduce_columns(b);

  // b_out = b_in * u, with u unimodular: same lattice, here Z^2 itself.
  std::vector<Int> uflat(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) uflat[i * 2 + j] = u[i][j];
  CHECK(abs(det_int(uflat, 2)) == 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rat acc(0);
      for (std::size_t m = 0; m < 2; ++m) acc += orig(i, m) * Rat(u[m][j]);
      CHECK(acc == b(i, j));
    }
  for (std::size_t j = 0; j < 2; ++j) {
    Rat n2 = b(0, j) * b(0, j) + b(1, j) * b(1, j);
    CHECK(n2 == 1);  // Z^2: both reduced vectors are unit vectors
  }
}

TEST_CASE("lll_reduce_columns: random bases keep the lattice and shrink") {
  std::mt19937_64 rng(7013);
  int done = 0;
  while (done < 60) {
    std::size_t n = 2 + done % 3;
    RatMatrix a = rnd_matrix(rng, n);
    Rat d0 = det(a);
    if (sgn(d0) == 0) continue;
    RatMatrix b = a;
    auto u = lll_reduce_columns(b);

    std::vector<Int> uflat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) uflat[i * n + j] = u[i][j];
    CHECK(abs(det_int(uflat, n)) == 1);
    CHECK(abs(det(b)) == abs(d0));
    // every output column really is b_in * (integer column of u)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat acc(0);
        for (std::size_t m = 0; m < n; ++m) acc += a(i, m) * Rat(u[m][j]);
        CHECK(acc == b(i, j));
      }
    // reducedness, via an independent Gram-Schmidt pass:
    // |mu_{k,j}| <= 1/2 and the Lovasz condition with delta = 3/4
    std::vector<std::vector<Rat>> gs(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    std::vector<Rat> n2(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) gs[k][i] = b(i, k);
      for (std::size_t j = 0; j < k; ++j) {
        Rat num(0);
        for (std::size_t i = 0; i < n; ++i) num += b(i, k) * gs[j][i];
        mu[k][j] = num / n2[j];
        for (std::size_t i = 0; i < n; ++i) gs[k][i] -= mu[k][j] * gs[j][i];
        CHECK(abs(mu[k][j]) <= make_rat(1, 2));
      }
      n2[k] = Rat(0);
      for (std::size_t i = 0; i < n; ++i) n2[k] += gs[k][i] * gs[k][i];
      if (k > 0)
        CHECK(n2[k] >=
              (make_rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * n2[k - 1]);
    }
    ++done;
  }

  RatMatrix dep(2, 2);
  dep(0, 0) = 1; dep(0, 1) = 2; dep(1, 0) = 2; dep(1, 1) = 4;
  CHECK_THROWS_AS(lll_reduce_columns(dep), std::domain_error);
  RatMatrix rect(2, 3);
  CHECK_THROWS_AS(lll_reduce_columns(rect), std::invalid_argument);
}

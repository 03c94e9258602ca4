#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latvol/simplex.hpp"
#include "latvol/sylvester.hpp"

using namespace latvol;

namespace {

LatticeSimplex tri(long ax, long ay, long bx, long by, long cx, long cy) {
  return LatticeSimplex(2, {{Int(ax), Int(ay)}, {Int(bx), Int(by)}, {Int(cx), Int(cy)}});
}

// Independent interior test: orientation of x against each facet must match
// the orientation of the omitted vertex.
bool halfspace_interior(const LatticeSimplex& s, const IntVec& x) {
  unsigned d = s.dimension();
  const auto& v = s.vertices();
  for (unsigned omit = 0; omit <= d; ++omit) {
    std::vector<Int> mx(d * d), mv(d * d);
    unsigned r = 0;
    for (unsigned j = 0; j <= d; ++j) {
      if (j == omit) continue;
      for (unsigned c = 0; c < d; ++c) {
        mx[r * d + c] = v[j][c] - x[c];
        mv[r * d + c] = v[j][c] - v[omit][c];
      }
      ++r;
    }
    Int dx = det_int(mx, d), dv = det_int(mv, d);
    if (sgn(dx) == 0 || sgn(dx) != sgn(dv)) return false;
  }
  return true;
}

LatticeSimplex rnd_simplex(std::mt19937_64& rng, unsigned d) {
  std::uniform_int_distribution<long> coord(-6, 6);
  for (;;) {
    std::vector<IntVec> verts(d + 1, IntVec(d));
    for (auto& v : verts)
      for (auto& c : v) c = coord(rng);
    try {
      return LatticeSimplex(d, std::move(verts));
    } catch (const singular_matrix_error&) {
    }
  }
}

}  // namespace

TEST_CASE("construction validates shape and independence") {
  CHECK_THROWS_AS(LatticeSimplex(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSimplex(2, {{Int(0), Int(0)}, {Int(1), Int(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatticeSimplex(2, {{Int(0)}, {Int(1)}, {Int(2)}}),
                  std::invalid_argument);
  // Collinear points.
  CHECK_THROWS_AS(tri(0, 0, 1, 1, 2, 2), singular_matrix_error);
}

TEST_CASE("barycentric coordinates at lattice and rational points") {
  LatticeSimplex s = tri(0, 0, 2, 0, 0, 4);
  BetaVector b = barycentric(s, IntVec{Int(1), Int(1)});
  CHECK(b.entries() == std::vector<Rat>{make_rat(1, 4), make_rat(1, 2), make_rat(1, 4)});
  CHECK_FALSE(b.sorted_flag());

  SortedBarycentric sb = sort_descending(b);
  CHECK(sb.beta.entries() ==
        std::vector<Rat>{make_rat(1, 2), make_rat(1, 4), make_rat(1, 4)});
  CHECK(sb.beta.sorted_flag());
  CHECK(sb.vertex_order == std::vector<std::size_t>{1, 0, 2});

  BetaVector br = barycentric(s, RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(br.entries() ==
        std::vector<Rat>{make_rat(5, 8), make_rat(1, 4), make_rat(1, 8)});

  CHECK_THROWS_AS(barycentric(s, IntVec{Int(1)}), std::invalid_argument);
}

TEST_CASE("barycentric reconstruction is exact on random simplices") {
  std::mt19937_64 rng(7040);
  std::uniform_int_distribution<long> coord(-8, 8);
  for (int rep = 0; rep < 60; ++rep) {
    unsigned d = 1 + rep % 3;
    LatticeSimplex s = rnd_simplex(rng, d);
    IntVec x(d);
    for (auto& c : x) c = coord(rng);
    BetaVector b = barycentric(s, x);
    Rat sum(0);
    for (std::size_t i = 0; i <= d; ++i) sum += b[i];
    CHECK(sum == 1);
    for (unsigned c = 0; c < d; ++c) {
      Rat acc(0);
      for (std::size_t i = 0; i <= d; ++i) acc += b[i] * Rat(s.vertices()[i][c]);
      CHECK(acc == Rat(x[c]));
    }
  }
}

TEST_CASE("volume and normalized volume") {
  CHECK(volume(tri(0, 0, 2, 0, 0, 4)) == Rat(4));
  CHECK(normalized_volume(tri(0, 0, 2, 0, 0, 4)) == 8);
  LatticeSimplex unit3(3, {{Int(0), Int(0), Int(0)},
                           {Int(1), Int(0), Int(0)},
                           {Int(0), Int(1), Int(0)},
                           {Int(0), Int(0), Int(1)}});
  CHECK(volume(unit3) == make_rat(1, 6));
  // Vertex order must not affect the (unsigned) volume.
  CHECK(volume(tri(2, 0, 0, 0, 0, 4)) == Rat(4));
}

TEST_CASE("interior point enumeration is exact and lexicographic") {
  LatticeSimplex s = tri(0, 0, 2, 0, 0, 6);
  auto pts = interior_points(s);
  CHECK(pts == std::vector<IntVec>{{Int(1), Int(1)}, {Int(1), Int(2)}});

  CHECK(interior_points(tri(0, 0, 1, 0, 0, 1)).empty());

  CHECK_THROWS_AS(interior_points(tri(0, 0, 1000, 0, 0, 1000), 100),
                  budget_error);
}

TEST_CASE("interior test agrees with the half-space oracle") {
  std::mt19937_64 rng(7041);
  for (int rep = 0; rep < 40; ++rep) {
    unsigned d = 1 + rep % 3;
    LatticeSimplex s = rnd_simplex(rng, d);
    IntVec lo(d, Int(-7)), x(d);
    std::uniform_int_distribution<long> coord(-7, 7);
    for (int t = 0; t < 25; ++t) {
      for (auto& c : x) c = coord(rng);
      CHECK(is_interior(s, x) == halfspace_interior(s, x));
    }
  }
}

TEST_CASE("maxmin point maximizes the smallest coordinate with lex ties") {
  LatticeSimplex seg(1, {{Int(0)}, {Int(5)}});
  MaxMinResult r = maxmin_point(seg);
  CHECK(r.point == IntVec{Int(2)});
  CHECK(r.gamma == make_rat(2, 5));
  CHECK(r.beta.entries() == std::vector<Rat>{make_rat(3, 5), make_rat(2, 5)});

  MaxMinResult tie = maxmin_point(tri(0, 0, 4, 0, 0, 4));
  CHECK(tie.point == IntVec{Int(1), Int(1)});
  CHECK(tie.gamma == make_rat(1, 4));

  CHECK_THROWS_AS(maxmin_point(tri(0, 0, 1, 0, 0, 1)), empty_interior_error);
}

TEST_CASE("maxmin gamma dominates every interior point's minimum") {
  std::mt19937_64 rng(7042);
  int done = 0;
  while (done < 25) {
    unsigned d = 1 + done % 3;
    LatticeSimplex s = rnd_simplex(rng, d);
    auto pts = interior_points(s);
    if (pts.empty()) continue;
    MaxMinResult r = maxmin_point(s);
    for (const auto& p : pts) {
      Rat g = barycentric(s, p).min_entry();
      CHECK(g <= r.gamma);
    }
    CHECK(is_interior(s, r.point));
    ++done;
  }
}

TEST_CASE("volume bound check at an interior point") {
  LatticeSimplex s31 = zpw_simplex(3, 1);
  VolumeBoundCheck c = check_pikhurko_volume_bound(s31, {Int(1), Int(1), Int(1)});
  CHECK(c.volume == Rat(12));
  CHECK(c.bound == Rat(12));  // equality: the family is extremal here
  CHECK(c.holds);

  LatticeSimplex seg(1, {{Int(0)}, {Int(5)}});
  VolumeBoundCheck c2 = check_pikhurko_volume_bound(seg, {Int(2)});
  // beta sorted (3/5, 2/5): bound = 4 / (1 * 3/5) = 20/3 >= 5.
  CHECK(c2.volume == Rat(5));
  CHECK(c2.bound == make_rat(20, 3));
  CHECK(c2.holds);

  CHECK_THROWS_AS(check_pikhurko_volume_bound(s31, {Int(0), Int(0), Int(0)}),
                  std::domain_error);
}

#include <catch2/catch_amalgamated.hpp>

#include "latvol/bounds.hpp"

using namespace latvol;

namespace {
Rat q(long n, long d) { return make_rat(Int(n), Int(d)); }
}

TEST_CASE("sharp volume bound values") {
  CHECK(theorem12_bound(2, 1) == Rat(6));
  CHECK(theorem12_bound(3, 1) == Rat(24));
  CHECK(theorem12_bound(4, 2) == Rat(735));
  CHECK(theorem12_bound(1, 1) == Rat(2));
  CHECK(theorem12_bound(1, 7) == Rat(14));
  CHECK_THROWS_AS(theorem12_bound(0, 1), std::domain_error);
  CHECK_THROWS_AS(theorem12_bound(2, 0), std::domain_error);
}

TEST_CASE("bound from a tau lower bound") {
  CHECK(theorem32_bound(2, 1, q(1, 9)) == q(9, 2));
  CHECK(theorem32_bound(3, 1, q(13, 1536)) == q(256, 13));
  CHECK(theorem32_bound(4, 1, q(1, 8820)) == q(735, 2));
  CHECK_THROWS_AS(theorem32_bound(2, 1, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(theorem32_bound(2, 1, q(-1, 9)), std::domain_error);
  // plugging the closed-form bound back in recovers the sharp bound exactly
  for (unsigned d = 1; d <= 8; ++d)
    for (long k = 1; k <= 3; ++k)
      CHECK(theorem32_bound(d, k, lemma51_bound(d)) == theorem12_bound(d, k));
}

TEST_CASE("previously known bound") {
  CHECK(pikhurko_old_bound(1, 1) == Rat(2));
  CHECK(pikhurko_old_bound(1, 5) == Rat(10));
  CHECK(pikhurko_old_bound(2, 1) == Rat(Int("20503125000")));  // 8 * 15^8
  // same value through a different exponent decomposition: 15^32 = 225^16
  CHECK(pikhurko_old_bound(3, 1) ==
        make_rat(int_pow(Int(2), 7) * int_pow(Int(225), 16), Int(6)));
  CHECK_THAT(log10_rat(pikhurko_old_bound(3, 1)),
             Catch::Matchers::WithinAbs(38.9640, 1e-3));
  CHECK_THROWS_AS(pikhurko_old_bound(0, 1), std::domain_error);
  // the tower exponent (d-1) 2^(d+1) is capped to keep evaluation exact
  CHECK_THROWS_AS(pikhurko_old_bound(16, 1), std::domain_error);
}

TEST_CASE("no-interior-point volume threshold") {
  CHECK(thm15a_threshold(1) == q(1, 4));
  CHECK(thm15a_threshold(2) == q(1, 18));
  CHECK(thm15a_threshold(3) == q(1, 168));
  CHECK_THROWS_AS(thm15a_threshold(0), std::domain_error);
}

TEST_CASE("barycentric-construction bound") {
  CHECK(thm15b_bound(1, 1) == Int(18));
  CHECK(thm15b_bound(1, 2) == Int(36));
  CHECK(thm15b_bound(2, 1) == Int(18060) * Int(18060));
  CHECK(thm15b_bound(2, 1) == Int("326163600"));
  CHECK_THROWS_AS(thm15b_bound(0, 1), std::domain_error);
  CHECK_THROWS_AS(thm15b_bound(1, 0), std::domain_error);
}

TEST_CASE("literature comparison values") {
  auto planar1 = literature_bounds(2, 1);
  REQUIRE(planar1.size() == 1);
  CHECK(planar1[0].value == q(9, 2));
  CHECK(planar1[0].label.find("Scott") != std::string::npos);

  auto planar3 = literature_bounds(2, 3);
  REQUIRE(planar3.size() == 1);
  CHECK(planar3[0].value == Rat(8));  // 2(k+1)

  auto dim3 = literature_bounds(3, 1);
  REQUIRE(dim3.size() == 1);
  CHECK(dim3[0].value == q(14106, 1000));
  CHECK(dim3[0].label.find("Pikhurko") != std::string::npos);

  CHECK(literature_bounds(1, 1).empty());
  CHECK(literature_bounds(4, 2).empty());
}

TEST_CASE("bounds report for dimension three") {
  BoundsReport rep = make_bounds_report(3, 1);
  CHECK(rep.d == 3);
  CHECK(rep.k == 1);
  CHECK(rep.zpw_volume == Rat(12));
  CHECK(rep.thm12 == Rat(24));
  CHECK(rep.ratio == Rat(2));
  REQUIRE(rep.thm32.has_value());
  CHECK(*rep.thm32 == q(256, 13));
  CHECK(rep.tau_source == "computed");
  CHECK(rep.pikhurko_old_log10 == "38.964");
  CHECK(rep.thm15a == q(1, 168));
  CHECK(rep.thm15b == int_pow(Int(21) * (sylvester(7) - 1), 3));
  REQUIRE(rep.literature.size() == 1);
  CHECK(rep.literature[0].value == q(7053, 500));
}

TEST_CASE("bounds report log10 strings") {
  BoundsReport rep = make_bounds_report(1, 1);
  CHECK(rep.pikhurko_old_log10 == "0.30103");
  BoundsReport rep2 = make_bounds_report(2, 1);
  CHECK(rep2.thm15b_log10 == "8.51344");
}

TEST_CASE("beyond the computed-tau range the closed form takes over") {
  BoundsReport rep = make_bounds_report(7, 2);
  CHECK(rep.tau_source == "lemma51");
  REQUIRE(rep.thm32.has_value());
  CHECK(*rep.thm32 == rep.thm12);
  CHECK(rep.ratio == q(16, 3));
}

TEST_CASE("bound ordering across dimensions and interior counts") {
  for (unsigned d = 1; d <= 8; ++d) {
    for (long k = 1; k <= 5; ++k) {
      BoundsReport rep = make_bounds_report(d, k);
      // witness volume never exceeds any of the proven bounds
      CHECK(rep.zpw_volume <= rep.thm12);
      CHECK(rep.zpw_volume <= *rep.thm32);
      CHECK(*rep.thm32 <= rep.thm12);
      CHECK(rep.ratio == make_rat(Int(k) * Int(d + 1), Int(k + 1)));
      CHECK(rep.ratio == rep.thm12 / rep.zpw_volume);
      CHECK(rep.zpw_volume == zpw_volume(long(d), k));
      CHECK(rep.thm15a < rep.zpw_volume);  // witness has interior points
    }
  }
}

TEST_CASE("sharp bound improves on the previously known one") {
  // equal in dimension one (both reduce to 2k), strictly better afterwards
  CHECK(theorem12_bound(1, 1) == pikhurko_old_bound(1, 1));
  for (unsigned d = 2; d <= 6; ++d)
    CHECK(theorem12_bound(d, 1) < pikhurko_old_bound(d, 1));
}

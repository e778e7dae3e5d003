#include <catch2/catch_amalgamated.hpp>

#include "hb/moments.hpp"

using namespace hb;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("moments match the worked example") {
  // n_u = 10, n_v = 20 among 100 objects.
  const auto m = cooccurrence_moments(10, 20, 100);
  REQUIRE_THAT(m.mean, WithinAbs(2.0, 1e-12));
  // Exact value 10*20/100 * 90/100 * 80/99 = 16/11.
  REQUIRE_THAT(m.variance, WithinRel(16.0 / 11.0, 1e-12));
  REQUIRE_THAT(m.sigma, WithinRel(1.2060453783110545, 1e-12));
}

TEST_CASE("moments are symmetric in the two tags") {
  const auto a = cooccurrence_moments(17, 42, 120);
  const auto b = cooccurrence_moments(42, 17, 120);
  REQUIRE(a.mean == b.mean);
  REQUIRE(a.variance == b.variance);
}

TEST_CASE("degenerate frequencies give zero variance") {
  // A tag on every object co-occurs with everything deterministically.
  SECTION("full tag") {
    const auto m = cooccurrence_moments(50, 12, 50);
    REQUIRE_THAT(m.mean, WithinAbs(12.0, 1e-12));
    REQUIRE_THAT(m.sigma, WithinAbs(0.0, 1e-12));
  }
  SECTION("absent tag") {
    const auto m = cooccurrence_moments(0, 12, 50);
    REQUIRE_THAT(m.mean, WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(m.sigma, WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("variance is positive in the interior") {
  for (std::uint64_t n_u = 1; n_u < 30; ++n_u)
    for (std::uint64_t n_v = 1; n_v < 30; ++n_v) {
      const auto m = cooccurrence_moments(n_u, n_v, 30);
      if (n_u < 30 && n_v < 30) REQUIRE(m.variance > 0.0);
      REQUIRE(m.mean >= 0.0);
    }
}

TEST_CASE("rejects invalid inputs") {
  REQUIRE_THROWS_AS(cooccurrence_moments(0, 0, 0), domain_error);
  REQUIRE_THROWS_AS(cooccurrence_moments(1, 1, 1), domain_error);
  REQUIRE_THROWS_AS(cooccurrence_moments(5, 2, 4), domain_error);
  REQUIRE_THROWS_AS(cooccurrence_moments(2, 7, 4), domain_error);
}

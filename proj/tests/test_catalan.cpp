#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "catdet/catalan.hpp"
#include "catdet/combinat.hpp"
#include "oracles.hpp"

using catdet::catalan_closed;
using catdet::catalan_det;
using catdet::catalan_mingantu;
using catdet::catalan_mingantu_prefix;
using catdet::ExactInt;

TEST_CASE("determinant route on known values", "[catalan]") {
  CHECK(catalan_det(0) == 1);
  CHECK(catalan_det(3) == 5);
  CHECK(catalan_det(4) == 14);
  CHECK_THROWS_AS(catalan_det(-1), std::out_of_range);
}

TEST_CASE("convolution recurrence on known values", "[catalan]") {
  CHECK(catalan_mingantu(1) == 1);
  CHECK(catalan_mingantu(2) == 2);
  CHECK(catalan_mingantu(5) == 42);  // 70 - 30 + 2
  CHECK_THROWS_AS(catalan_mingantu(0), std::out_of_range);
}

TEST_CASE("prefix computation returns the whole sequence", "[catalan]") {
  const auto prefix = catalan_mingantu_prefix(10);
  REQUIRE(prefix.size() == 11);
  CHECK(prefix == std::vector<ExactInt>{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796});
}

TEST_CASE("all three routes agree", "[catalan]") {
  for (long long n = 1; n <= 30; ++n) {
    const ExactInt closed = catalan_closed(n);
    CHECK(catalan_det(n) == closed);
    CHECK(catalan_mingantu(n) == closed);
  }
}

TEST_CASE("recurrence route matches the closed form on a long prefix", "[catalan]") {
  const auto prefix = catalan_mingantu_prefix(120);
  for (long long n = 0; n <= 120; ++n)
    CHECK(prefix[static_cast<std::size_t>(n)] == catalan_closed(n));
}

TEST_CASE("classical self-convolution recurrence agrees", "[catalan]") {
  const auto segner = oracle::segner_catalans(100);
  for (long long n = 0; n <= 100; ++n)
    CHECK(segner[static_cast<std::size_t>(n)] == catalan_closed(n));
}

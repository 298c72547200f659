#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "catdet/catalan.hpp"
#include "catdet/lattice.hpp"
#include "catdet/verify.hpp"
#include "oracles.hpp"

using catdet::BoundaryPair;
using catdet::count_dyck;
using catdet::count_paths_det;
using catdet::count_paths_dp;
using catdet::enumerate_paths;
using catdet::ExactInt;

TEST_CASE("determinant route on known boundaries", "[lattice]") {
  CHECK(count_paths_det(BoundaryPair({0, 1, 2}, {0, 0, 0})) == 5);
  CHECK(count_paths_det(BoundaryPair({1, 2, 2}, {0, 0, 1})) == 8);
  CHECK(count_paths_det(BoundaryPair({0, 2, 2, 5}, {0, 2, 2, 5})) == 1);
}

TEST_CASE("dp route on known boundaries", "[lattice]") {
  CHECK(count_paths_dp(BoundaryPair({0, 1, 2, 3}, {0, 0, 0, 0})) == 14);
  CHECK(count_paths_dp(BoundaryPair({1, 2, 2}, {0, 0, 1})) == 8);
  CHECK(count_paths_dp(BoundaryPair({3}, {0})) == 4);
}

TEST_CASE("enumeration lists height sequences in lexicographic order", "[lattice]") {
  using Paths = std::vector<std::vector<long long>>;
  CHECK(enumerate_paths(BoundaryPair({0, 1}, {0, 0})) == Paths{{0, 0}, {0, 1}});
  CHECK(enumerate_paths(BoundaryPair({0}, {0})) == Paths{{0}});
  CHECK(enumerate_paths(BoundaryPair({1, 1}, {0, 0})) == Paths{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("enumeration cap is enforced", "[lattice]") {
  const BoundaryPair wide({9, 9, 9, 9, 9, 9}, {0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(enumerate_paths(wide, 100), std::length_error);
}

TEST_CASE("enumeration length equals the dp count", "[lattice]") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    std::mt19937_64 rng(catdet::mix_seed(5, trial));
    const BoundaryPair bounds = catdet::random_boundary_pair(rng, 5);
    CHECK(ExactInt(enumerate_paths(bounds).size()) == count_paths_dp(bounds));
  }
}

TEST_CASE("determinant and dp agree on random boundaries", "[lattice]") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    std::mt19937_64 rng(catdet::mix_seed(11, trial));
    const BoundaryPair bounds = catdet::random_boundary_pair(rng, 8);
    const ExactInt expected = count_paths_dp(bounds);
    CHECK(count_paths_det(bounds) == expected);
    if (bounds.size() <= 5) CHECK(oracle::count_paths_brute(bounds) == expected);
  }
}

TEST_CASE("widening one upper bound never lowers the count", "[lattice]") {
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    std::mt19937_64 rng(catdet::mix_seed(21, trial));
    const BoundaryPair bounds = catdet::random_boundary_pair(rng, 6);
    const ExactInt base = count_paths_dp(bounds);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      std::vector<long long> widened = bounds.upper();
      widened[i] += 1;
      if (i + 1 < widened.size() && widened[i] > widened[i + 1]) continue;  // stays nondecreasing
      CHECK(count_paths_dp(BoundaryPair(widened, bounds.lower())) >= base);
    }
  }
}

TEST_CASE("staircase counts are Catalan numbers", "[lattice]") {
  CHECK(count_dyck(1) == 1);
  CHECK(count_dyck(3) == 5);
  CHECK(count_dyck(5) == 42);
  CHECK_THROWS_AS(count_dyck(0), std::out_of_range);
  for (long long n = 1; n <= 25; ++n) CHECK(count_dyck(n) == catdet::catalan_closed(n));
}

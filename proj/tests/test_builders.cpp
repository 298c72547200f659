#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "catdet/boundary.hpp"
#include "catdet/pascal.hpp"

using catdet::BoundaryPair;
using catdet::build_deformed_pascal;
using catdet::build_path_matrix;
using catdet::build_toeplitz_hessenberg;
using catdet::ExactInt;
using catdet::HessenbergMatrix;
using catdet::pascal_table;

namespace {

std::vector<ExactInt> flat(const HessenbergMatrix& h) {
  std::vector<ExactInt> out;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) out.push_back(h.at(i, j));
  return out;
}

BoundaryPair staircase(long long n) {
  std::vector<long long> upper(static_cast<std::size_t>(n));
  std::iota(upper.begin(), upper.end(), 0);
  return BoundaryPair(upper, std::vector<long long>(static_cast<std::size_t>(n), 0));
}

}  // namespace

TEST_CASE("deformed Pascal matrix entries", "[builders]") {
  CHECK(flat(build_deformed_pascal(1)) == std::vector<ExactInt>{1});
  CHECK(flat(build_deformed_pascal(2)) == std::vector<ExactInt>{1, 0, 1, 2});
  CHECK(flat(build_deformed_pascal(3)) == std::vector<ExactInt>{1, 0, 0, 1, 2, 1, 0, 1, 3});
  CHECK(build_deformed_pascal(0).size() == 0);
  CHECK_THROWS_AS(build_deformed_pascal(-1), std::out_of_range);
}

TEST_CASE("Toeplitz band matrix entries", "[builders]") {
  CHECK(flat(build_toeplitz_hessenberg(2, 3)) ==
        std::vector<ExactInt>{2, 1, 0, 1, 2, 1, 0, 1, 2});
  CHECK(flat(build_toeplitz_hessenberg(8, 2)) == std::vector<ExactInt>{8, 28, 1, 8});
  CHECK(flat(build_toeplitz_hessenberg(1, 2)) == std::vector<ExactInt>{1, 0, 1, 1});
  CHECK_THROWS_AS(build_toeplitz_hessenberg(0, 3), std::out_of_range);
  CHECK_THROWS_AS(build_toeplitz_hessenberg(3, 0), std::out_of_range);
}

TEST_CASE("band orientation does not change the minors", "[builders]") {
  // The same band written down the first column instead; for n >= 3 that
  // orientation cannot live in the upper Hessenberg type, but its leading
  // minors must match the builder's output since the two are transposes.
  for (long long n : {1, 2, 3, 5, 8}) {
    const long long m = 6;
    std::vector<ExactInt> entries(static_cast<std::size_t>(m * m));
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < m; ++j)
        entries[static_cast<std::size_t>(i * m + j)] =
            i - j + 1 >= 0 ? catdet::binomial(n, i - j + 1) : 0;
    const catdet::DenseIntMatrix column_band(static_cast<std::size_t>(m),
                                             static_cast<std::size_t>(m), std::move(entries));
    const auto minors = catdet::principal_minors(build_toeplitz_hessenberg(n, m),
                                                 static_cast<std::size_t>(m));
    for (long long k = 1; k <= m; ++k) {
      std::vector<ExactInt> block;
      for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < k; ++j) block.push_back(column_band.at(i, j));
      CHECK(catdet::det_bareiss(catdet::DenseIntMatrix(
                static_cast<std::size_t>(k), static_cast<std::size_t>(k), std::move(block))) ==
            minors[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("Toeplitz structure is shift invariant", "[builders]") {
  for (long long n : {1, 2, 5, 9})
    for (long long m : {1, 2, 6, 12}) {
      const HessenbergMatrix j = build_toeplitz_hessenberg(n, m);
      for (std::size_t r = 0; r + 1 < j.size(); ++r)
        for (std::size_t c = 0; c + 1 < j.size(); ++c) CHECK(j.at(r, c) == j.at(r + 1, c + 1));
    }
}

TEST_CASE("path matrix entries", "[builders]") {
  CHECK(flat(build_path_matrix(BoundaryPair({1, 2, 2}, {0, 0, 1}))) ==
        std::vector<ExactInt>{2, 1, 0, 1, 3, 1, 0, 1, 2});
  CHECK(flat(build_path_matrix(BoundaryPair({0}, {0}))) == std::vector<ExactInt>{1});
}

TEST_CASE("staircase boundaries reproduce the deformed Pascal matrix", "[builders]") {
  for (long long n = 1; n <= 20; ++n) {
    const HessenbergMatrix from_paths = build_path_matrix(staircase(n));
    const HessenbergMatrix direct = build_deformed_pascal(n);
    CHECK(flat(from_paths) == flat(direct));
  }
}

TEST_CASE("path matrix handles gaps between boundaries", "[builders]") {
  // upper_1 - lower_2 + 1 = 0 - 3 + 1 = -2: the entry must be 0, not an error.
  const HessenbergMatrix m = build_path_matrix(BoundaryPair({0, 5}, {0, 3}));
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 1) == 3);
}

TEST_CASE("boundary validation", "[builders]") {
  CHECK_THROWS_AS(BoundaryPair({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryPair({1, 2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryPair({2, 1}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryPair({1, 2}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryPair({1, 2}, {2, 2}), std::invalid_argument);
}

TEST_CASE("pascal table values and highlight", "[builders]") {
  const auto nine = pascal_table(9, 7);
  CHECK(nine.rows() == 9);
  CHECK(nine.cols() == 9);
  CHECK(nine.highlighted() ==
        std::vector<ExactInt>{1, 8, 36, 120, 330, 792, 1716, 3432, 6435});

  const auto tiny = pascal_table(1, 0);
  CHECK(tiny.cols() == 1);
  CHECK(tiny.highlighted() == std::vector<ExactInt>{1});

  const auto third = pascal_table(5, 2);
  CHECK(third.highlighted() == std::vector<ExactInt>{1, 3, 6, 10, 15});

  CHECK_THROWS_AS(pascal_table(0, 0), std::out_of_range);
}

TEST_CASE("pascal table widens to include the highlighted column", "[builders]") {
  const auto wide = pascal_table(3, 6);
  CHECK(wide.rows() == 3);
  CHECK(wide.cols() == 7);
  CHECK(wide.highlighted() == std::vector<ExactInt>{1, 7, 28});
}

TEST_CASE("pascal table is symmetric across the diagonal", "[builders]") {
  const auto t = pascal_table(10, 4);
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c)
      if (c < t.rows() && r < t.cols()) CHECK(t.at(r, c) == t.at(c, r));
}

TEST_CASE("pascal table csv shape", "[builders]") {
  const std::string csv = pascal_table(2, 1).to_csv();
  CHECK(csv == "c0,c1,highlight\n1,1,1\n1,2,2\n");
}

TEST_CASE("pascal table text marks the column", "[builders]") {
  const std::string text = pascal_table(3, 1).to_text();
  CHECK(text.find("[1]") != std::string::npos);
  CHECK(text.find("[3]") != std::string::npos);
}

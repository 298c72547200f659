#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "catdet/io.hpp"
#include "catdet/verify.hpp"

using catdet::boundary_from_json;
using catdet::boundary_to_json;
using catdet::BoundaryPair;
using catdet::DenseIntMatrix;
using catdet::json;
using catdet::load_json_file;
using catdet::matrix_from_json;
using catdet::matrix_to_json;
using catdet::save_json_file;
using catdet::series_from_json;
using catdet::series_to_json;
using catdet::TruncatedSeries;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("matrix documents round-trip bit-exactly", "[io]") {
  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    std::mt19937_64 rng(catdet::mix_seed(17, trial));
    const DenseIntMatrix m = catdet::random_hessenberg(rng, 8).to_dense();
    const json j = matrix_to_json(m);
    CHECK(matrix_from_json(j) == m);
    CHECK(json::parse(j.dump()).dump() == j.dump());
  }
}

TEST_CASE("matrix documents carry entries as decimal strings", "[io]") {
  const json j = matrix_to_json(DenseIntMatrix(1, 2, {3, -4}));
  CHECK(j.dump() == R"({"rows":1,"cols":2,"entries":["3","-4"]})");
}

TEST_CASE("matrix parsing accepts plain integers and rejects floats", "[io]") {
  CHECK(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[7]})")).at(0, 0) == 7);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[7.5]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":["1"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":["x"]})")),
                  std::invalid_argument);
}

TEST_CASE("boundary documents round-trip", "[io]") {
  const BoundaryPair bounds({1, 2, 2}, {0, 0, 1});
  const json j = boundary_to_json(bounds);
  CHECK(j.dump() == R"({"a":[1,2,2],"b":[0,0,1]})");
  CHECK(boundary_from_json(j) == bounds);
  CHECK_THROWS_AS(boundary_from_json(json::parse(R"({"a":[1],"b":[2]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(boundary_from_json(json::parse(R"({"a":[1]})")), std::invalid_argument);
}

TEST_CASE("series documents round-trip", "[io]") {
  const TruncatedSeries f{{1, -2, 3}};
  const json j = series_to_json(f);
  CHECK(j.dump() == R"({"coeffs":["1","-2","3"],"order":2})");
  CHECK(series_from_json(j) == f);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"coeffs":["1","2"],"order":5})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"order":2})")), std::invalid_argument);
}

TEST_CASE("file save and load round-trip", "[io]") {
  const auto path = temp_file("catdet_io_roundtrip.json");
  const json j = matrix_to_json(DenseIntMatrix(2, 2, {1, 2, 0, 3}));
  save_json_file(path.string(), j);
  CHECK(load_json_file(path.string()) == j);
  std::filesystem::remove(path);
}

TEST_CASE("missing and malformed files are reported", "[io]") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/catdet.json"), std::invalid_argument);
  const auto path = temp_file("catdet_io_malformed.json");
  std::ofstream(path) << "{not json";
  CHECK_THROWS(load_json_file(path.string()));
  std::filesystem::remove(path);
}

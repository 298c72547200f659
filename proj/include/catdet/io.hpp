#pragma once

#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catdet/boundary.hpp"
#include "catdet/integer.hpp"
#include "catdet/matrix.hpp"
#include "catdet/series.hpp"

namespace catdet {

/// Insertion-ordered JSON keeps emitted key order fixed, so output is
/// byte-for-byte reproducible.
using json = nlohmann::ordered_json;

/// Read an integer field that may be huge: decimal strings always work,
/// plain JSON integers are accepted for convenience. Floats are refused
/// rather than rounded.
inline ExactInt exact_from_json(const json& value, const std::string& where) {
  if (value.is_string()) return parse_decimal(value.get<std::string>());
  if (value.is_number_integer() || value.is_number_unsigned())
    return ExactInt(value.get<long long>());
  throw std::invalid_argument(where + ": expected an integer or a decimal string, got " +
                              value.dump());
}

/// Read a machine-sized integer field under the same rules.
inline long long ll_from_json(const json& value, const std::string& where) {
  if (value.is_string()) {
    const ExactInt parsed = parse_decimal(value.get<std::string>());
    if (parsed < std::numeric_limits<long long>::min() ||
        parsed > std::numeric_limits<long long>::max())
      throw std::invalid_argument(where + ": value out of range: " + to_decimal(parsed));
    return static_cast<long long>(parsed);
  }
  if (value.is_number_integer() || value.is_number_unsigned()) return value.get<long long>();
  throw std::invalid_argument(where + ": expected an integer or a decimal string, got " +
                              value.dump());
}

inline const json& require_field(const json& j, const std::string& key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(what + ": missing field \"" + key + "\"");
  return j.at(key);
}

// -- matrices ---------------------------------------------------------------

/// {"rows": R, "cols": C, "entries": [.. row-major decimal strings ..]}
inline json matrix_to_json(const DenseIntMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(to_decimal(m.at(i, k)));
  j["entries"] = std::move(entries);
  return j;
}

inline DenseIntMatrix matrix_from_json(const json& j) {
  const long long rows = ll_from_json(require_field(j, "rows", "matrix"), "matrix.rows");
  const long long cols = ll_from_json(require_field(j, "cols", "matrix"), "matrix.cols");
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: rows and cols must be >= 0");
  const json& entries = require_field(j, "entries", "matrix");
  if (!entries.is_array())
    throw std::invalid_argument("matrix.entries: expected an array, got " + entries.dump());
  std::vector<ExactInt> values;
  values.reserve(entries.size());
  for (const json& e : entries) values.push_back(exact_from_json(e, "matrix.entries"));
  return DenseIntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                        std::move(values));
}

// -- boundary pairs ----------------------------------------------------------

/// {"a": [upper bounds], "b": [lower bounds]}
inline json boundary_to_json(const BoundaryPair& bounds) {
  json j;
  j["a"] = bounds.upper();
  j["b"] = bounds.lower();
  return j;
}

inline BoundaryPair boundary_from_json(const json& j) {
  auto read_sequence = [&](const std::string& key) {
    const json& arr = require_field(j, key, "boundary");
    if (!arr.is_array())
      throw std::invalid_argument("boundary." + key + ": expected an array, got " + arr.dump());
    std::vector<long long> values;
    values.reserve(arr.size());
    for (const json& e : arr) values.push_back(ll_from_json(e, "boundary." + key));
    return values;
  };
  return BoundaryPair(read_sequence("a"), read_sequence("b"));
}

// -- truncated series ---------------------------------------------------------

/// {"coeffs": [decimal strings, constant term first], "order": N}
inline json series_to_json(const TruncatedSeries& f) {
  json j;
  json coeffs = json::array();
  for (const ExactInt& c : f.coeffs()) coeffs.push_back(to_decimal(c));
  j["coeffs"] = std::move(coeffs);
  j["order"] = f.order();
  return j;
}

inline TruncatedSeries series_from_json(const json& j) {
  const json& arr = require_field(j, "coeffs", "series");
  if (!arr.is_array())
    throw std::invalid_argument("series.coeffs: expected an array, got " + arr.dump());
  std::vector<ExactInt> coeffs;
  coeffs.reserve(arr.size());
  for (const json& e : arr) coeffs.push_back(exact_from_json(e, "series.coeffs"));
  TruncatedSeries f{std::move(coeffs)};
  if (j.contains("order")) {
    const long long order = ll_from_json(j.at("order"), "series.order");
    if (order != static_cast<long long>(f.order()))
      throw std::invalid_argument("series: order " + std::to_string(order) + " does not match " +
                                  std::to_string(f.order() + 1) + " coefficients");
  }
  return f;
}

// -- files --------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return json::parse(in);
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace catdet

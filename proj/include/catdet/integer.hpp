#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace catdet {

/// Arbitrary-precision signed integer, the scalar type for every value in
/// this library. Arithmetic is exact at any magnitude.
using ExactInt = boost::multiprecision::cpp_int;

/// Canonical wire form: decimal digits with an optional leading '-'.
inline std::string to_decimal(const ExactInt& value) { return value.str(); }

/// Parses the canonical decimal form. Rejects anything else (whitespace,
/// '+', hex prefixes, empty input) so the file formats stay unambiguous.
inline ExactInt parse_decimal(std::string_view text) {
  const std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start)
    throw std::invalid_argument("parse_decimal: empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("parse_decimal: invalid integer literal \"" +
                                  std::string(text) + "\"");
  }
  return ExactInt(std::string(text));
}

}  // namespace catdet

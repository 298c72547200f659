#pragma once

#include <stdexcept>
#include <string>

#include "catdet/integer.hpp"

namespace catdet {

/// Binomial coefficient C(n, k) with the zero-fill convention: 0 whenever
/// k < 0 or k > n. A negative upper index is rejected. Computed by the
/// multiplicative product formula, so intermediates never exceed the result
/// by more than one factor and every division is exact.
inline ExactInt binomial(long long n, long long k) {
  if (n < 0)
    throw std::domain_error("binomial: upper index must be nonnegative, got " +
                            std::to_string(n));
  if (k < 0 || k > n) return ExactInt(0);
  if (k > n - k) k = n - k;
  ExactInt result(1);
  // after step i the value is C(n-k+i, i), so dividing by i is exact
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// nth Catalan number via the closed form C(2n, n) / (n + 1); the division
/// is exact.
inline ExactInt catalan_closed(long long n) {
  if (n < 0)
    throw std::domain_error("catalan_closed: n must be nonnegative, got " +
                            std::to_string(n));
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace catdet

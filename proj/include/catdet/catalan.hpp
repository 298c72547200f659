#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "catdet/combinat.hpp"
#include "catdet/matrix.hpp"
#include "catdet/pascal.hpp"

namespace catdet {

/// Catalan number C_n as the order-n principal minor of the deformed Pascal
/// matrix. C_0 = 1 falls out of the empty determinant.
inline ExactInt catalan_det(long long n) {
  if (n < 0)
    throw std::out_of_range("catalan_det: n must be >= 0, got " + std::to_string(n));
  return det_hessenberg_recurrence(build_deformed_pascal(n));
}

/// C_0 .. C_n by the alternating self-convolution
///   C_k = sum_{j>=1} (-1)^{j-1} C_{k-j} C(k-j+1, j),
/// summed while the binomial's upper index stays >= its lower index. Both
/// seeds C_0 = C_1 = 1 are needed before the recurrence takes over.
inline std::vector<ExactInt> catalan_mingantu_prefix(long long n) {
  if (n < 0)
    throw std::out_of_range("catalan_mingantu_prefix: n must be >= 0, got " + std::to_string(n));
  std::vector<ExactInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  if (n >= 1) c[1] = 1;
  for (long long k = 2; k <= n; ++k) {
    ExactInt acc = 0;
    for (long long j = 1; k - j + 1 >= j; ++j) {
      ExactInt term = c[static_cast<std::size_t>(k - j)] * binomial(k - j + 1, j);
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    c[static_cast<std::size_t>(k)] = acc;
  }
  return c;
}

/// Catalan number C_n by the alternating self-convolution. The recurrence
/// needs both seeds, so it only defines C_n from n = 1 up.
inline ExactInt catalan_mingantu(long long n) {
  if (n < 1)
    throw std::out_of_range("catalan_mingantu: n must be >= 1, got " + std::to_string(n));
  return catalan_mingantu_prefix(n).back();
}

}  // namespace catdet

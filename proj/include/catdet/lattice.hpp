#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "catdet/boundary.hpp"
#include "catdet/integer.hpp"
#include "catdet/matrix.hpp"
#include "catdet/pascal.hpp"

namespace catdet {

/// Number of nondecreasing integer sequences p with lower_i <= p_i <= upper_i
/// for all i, computed as the determinant of the path-count matrix.
inline ExactInt count_paths_det(const BoundaryPair& bounds) {
  return det_hessenberg_recurrence(build_path_matrix(bounds));
}

/// The same count by direct dynamic programming: sweep positions left to
/// right, keeping for each height h the number of valid prefixes ending at
/// exactly h, and fold with a running prefix sum so each step costs O(range).
inline ExactInt count_paths_dp(const BoundaryPair& bounds) {
  const auto& upper = bounds.upper();
  const auto& lower = bounds.lower();
  const long long lo = lower.front();
  const long long hi = upper.back();
  const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  // ways[h - lo] = number of valid nondecreasing prefixes ending at height h.
  std::vector<ExactInt> ways(span, 0);
  for (long long h = lower[0]; h <= upper[0]; ++h) ways[static_cast<std::size_t>(h - lo)] = 1;
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    ExactInt below = 0;  // prefixes ending at height <= h at position i-1
    for (long long h = lo; h <= hi; ++h) {
      below += ways[static_cast<std::size_t>(h - lo)];
      ways[static_cast<std::size_t>(h - lo)] =
          (h >= lower[i] && h <= upper[i]) ? below : ExactInt(0);
    }
  }
  return std::accumulate(ways.begin(), ways.end(), ExactInt(0));
}

/// All valid sequences in lexicographic order. Guarded by a cap because the
/// count grows fast; callers wanting the number alone should use the
/// counting routines.
inline std::vector<std::vector<long long>> enumerate_paths(const BoundaryPair& bounds,
                                                           std::size_t cap = 1'000'000) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> path(bounds.size());
  const auto& upper = bounds.upper();
  const auto& lower = bounds.lower();
  // Iterative DFS via explicit rewind keeps the stack flat on long boundaries.
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == bounds.size()) {
      if (out.size() >= cap)
        throw std::length_error("enumerate_paths: more than " + std::to_string(cap) + " paths");
      out.push_back(path);
      return;
    }
    const long long from = i == 0 ? lower[i] : std::max(lower[i], path[i - 1]);
    for (long long h = from; h <= upper[i]; ++h) {
      path[i] = h;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return out;
}

/// Number of staircase paths under the diagonal: upper boundary 0,1,..,n-1
/// with lower boundary all zeros. This count is the Catalan number C_n.
inline ExactInt count_dyck(long long n) {
  if (n < 1)
    throw std::out_of_range("count_dyck: n must be >= 1, got " + std::to_string(n));
  std::vector<long long> upper(static_cast<std::size_t>(n));
  std::iota(upper.begin(), upper.end(), 0);
  std::vector<long long> lower(static_cast<std::size_t>(n), 0);
  return count_paths_det(BoundaryPair(std::move(upper), std::move(lower)));
}

}  // namespace catdet

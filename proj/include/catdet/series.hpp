#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catdet/combinat.hpp"
#include "catdet/matrix.hpp"
#include "catdet/pascal.hpp"

namespace catdet {

/// A formal power series known through x^order. Coefficients past the stored
/// order read as zero, which lets convolution loops run without bounds fuss.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("TruncatedSeries: need at least the constant coefficient");
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<ExactInt>& coeffs() const { return coeffs_; }

  const ExactInt& coeff(std::size_t k) const {
    static const ExactInt zero = 0;
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<ExactInt> coeffs_;
};

/// (1 + x)^n through x^order: coefficients C(n, 0), C(n, 1), .., C(n, order).
inline TruncatedSeries binomial_power(long long n, std::size_t order) {
  if (n < 0)
    throw std::out_of_range("binomial_power: n must be >= 0, got " + std::to_string(n));
  std::vector<ExactInt> coeffs(order + 1);
  for (std::size_t k = 0; k <= order; ++k) coeffs[k] = binomial(n, static_cast<long long>(k));
  return TruncatedSeries(std::move(coeffs));
}

/// The product f * g through x^order.
inline TruncatedSeries convolve(const TruncatedSeries& f, const TruncatedSeries& g,
                                std::size_t order) {
  std::vector<ExactInt> coeffs(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    ExactInt acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += f.coeff(i) * g.coeff(k - i);
    coeffs[k] = std::move(acc);
  }
  return TruncatedSeries(std::move(coeffs));
}

/// The reciprocal series g with f * g = 1, through x^order. Solving the
/// convolution for g_k gives g_0 = 1 and g_k = -sum_{i=1}^{k} f_i g_{k-i}.
/// Only series with constant coefficient 1 stay integral, so anything else
/// is refused.
inline TruncatedSeries reciprocal(const TruncatedSeries& f, std::size_t order) {
  if (f.coeff(0) != 1)
    throw std::domain_error("reciprocal: constant coefficient must be 1, got " +
                            to_decimal(f.coeff(0)));
  std::vector<ExactInt> g(order + 1);
  g[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    ExactInt acc = 0;
    const std::size_t reach = std::min(k, f.order());
    for (std::size_t i = 1; i <= reach; ++i) acc += f.coeff(i) * g[k - i];
    g[k] = -acc;
  }
  return TruncatedSeries(std::move(g));
}

/// The reciprocal of (1 + x)^n read off determinants instead of division:
/// coefficient k is (-1)^k times the order-k principal minor of the
/// Toeplitz-Hessenberg matrix with the C(n, .) band.
inline TruncatedSeries reciprocal_via_minors(long long n, std::size_t order) {
  if (n < 1)
    throw std::out_of_range("reciprocal_via_minors: n must be >= 1, got " + std::to_string(n));
  if (order == 0) return TruncatedSeries({ExactInt(1)});
  const auto minors = principal_minors(build_toeplitz_hessenberg(n, static_cast<long long>(order)),
                                       order);
  std::vector<ExactInt> coeffs(order + 1);
  for (std::size_t k = 0; k <= order; ++k) coeffs[k] = k % 2 == 0 ? minors[k] : -minors[k];
  return TruncatedSeries(std::move(coeffs));
}

/// The degree-k coefficient of (1+x)^(-n) * (1+x)^n written out as the
/// alternating binomial sum
///   sum_{i=0}^{k} (-1)^i C(n+i-1, i) C(n, k-i).
/// Returned raw: it is 1 at k = 0 and 0 for every k >= 1, and callers check
/// exactly that.
inline ExactInt verify_convolution_identity(long long n, long long k) {
  if (n < 1)
    throw std::out_of_range("verify_convolution_identity: n must be >= 1, got " +
                            std::to_string(n));
  if (k < 0)
    throw std::out_of_range("verify_convolution_identity: k must be >= 0, got " +
                            std::to_string(k));
  ExactInt acc = 0;
  for (long long i = 0; i <= k; ++i) {
    ExactInt term = binomial(n + i - 1, i) * binomial(n, k - i);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

/// One instance of the minor recurrence check, reported with all three
/// routes so a caller can see which pair diverges if any does.
struct RecurrenceIdentity {
  ExactInt lhs_recurrence;  ///< the alternating band-weighted sum of smaller minors
  ExactInt rhs_closed;      ///< C(n+m-1, m)
  ExactInt det_value;       ///< the order-m principal minor, computed directly

  bool consistent() const { return lhs_recurrence == rhs_closed && rhs_closed == det_value; }
};

/// Evaluate the recurrence satisfied by the principal minors M(n, m) of the
/// C(n, .)-band Toeplitz-Hessenberg matrix:
///   M(n, m) = sum_{h=1}^{min(n, m)} (-1)^{h-1} C(n, h) M(n, m-h),  M(n, 0) = 1,
/// next to its closed form C(n+m-1, m) and the determinant itself.
inline RecurrenceIdentity verify_recurrence_identity(long long n, long long m) {
  if (n < 1)
    throw std::out_of_range("verify_recurrence_identity: n must be >= 1, got " + std::to_string(n));
  if (m < 0)
    throw std::out_of_range("verify_recurrence_identity: m must be >= 0, got " + std::to_string(m));
  RecurrenceIdentity result;
  result.rhs_closed = binomial(n + m - 1, m);
  if (m == 0) {
    // The empty minor: the recurrence bottoms out here rather than summing.
    result.lhs_recurrence = 1;
    result.det_value = 1;
    return result;
  }
  const auto minors =
      principal_minors(build_toeplitz_hessenberg(n, m), static_cast<std::size_t>(m));
  result.det_value = minors[static_cast<std::size_t>(m)];
  ExactInt acc = 0;
  for (long long h = 1; h <= std::min(n, m); ++h) {
    ExactInt term = binomial(n, h) * minors[static_cast<std::size_t>(m - h)];
    if (h % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  result.lhs_recurrence = std::move(acc);
  return result;
}

}  // namespace catdet

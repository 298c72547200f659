#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catdet {

/// Height boundaries for constrained monotone lattice paths: an upper
/// sequence and a lower sequence of equal length n >= 1, both nondecreasing,
/// pointwise upper >= lower. The i-th horizontal step of an admissible path
/// has height in [lower_i, upper_i].
class BoundaryPair {
 public:
  BoundaryPair(std::vector<long long> upper, std::vector<long long> lower)
      : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.empty() || lower_.empty())
      throw std::invalid_argument("BoundaryPair: boundaries must have length >= 1");
    if (upper_.size() != lower_.size())
      throw std::invalid_argument("BoundaryPair: upper has " + std::to_string(upper_.size()) +
                                  " entries, lower has " + std::to_string(lower_.size()));
    for (std::size_t i = 0; i < upper_.size(); ++i) {
      if (i > 0 && (upper_[i] < upper_[i - 1] || lower_[i] < lower_[i - 1]))
        throw std::invalid_argument("BoundaryPair: boundaries must be nondecreasing (step " +
                                    std::to_string(i + 1) + ")");
      if (upper_[i] < lower_[i])
        throw std::invalid_argument("BoundaryPair: upper bound below lower bound at step " +
                                    std::to_string(i + 1));
    }
  }

  std::size_t size() const { return upper_.size(); }
  const std::vector<long long>& upper() const { return upper_; }
  const std::vector<long long>& lower() const { return lower_; }

  bool operator==(const BoundaryPair&) const = default;

 private:
  std::vector<long long> upper_;
  std::vector<long long> lower_;
};

}  // namespace catdet

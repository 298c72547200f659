#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catdet/integer.hpp"

namespace catdet {

/// Dense row-major integer matrix. Zero rows or columns are legal; the 0x0
/// matrix has determinant 1.
class DenseIntMatrix {
 public:
  DenseIntMatrix() = default;

  DenseIntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  DenseIntMatrix(std::size_t rows, std::size_t cols, std::vector<ExactInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("DenseIntMatrix: expected " +
                                  std::to_string(rows_ * cols_) + " entries, got " +
                                  std::to_string(entries_.size()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const ExactInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  ExactInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<ExactInt>& entries() const { return entries_; }

  DenseIntMatrix transposed() const {
    DenseIntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const DenseIntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactInt> entries_;
};

/// Square upper Hessenberg matrix: entry(i, j) = 0 whenever i > j + 1
/// (0-indexed). The constructor validates the band structure, so a
/// constructed value is always a legal input for the recurrence engine.
/// Subdiagonal entries are unconstrained; the normalized form (all-ones
/// subdiagonal) is just the common special case.
class HessenbergMatrix {
 public:
  HessenbergMatrix() = default;

  HessenbergMatrix(std::size_t n, std::vector<ExactInt> entries)
      : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_)
      throw std::invalid_argument("HessenbergMatrix: expected " + std::to_string(n_ * n_) +
                                  " entries, got " + std::to_string(entries_.size()));
    for (std::size_t i = 2; i < n_; ++i)
      for (std::size_t j = 0; j + 1 < i; ++j)
        if (entries_[i * n_ + j] != 0)
          throw std::invalid_argument("HessenbergMatrix: nonzero entry below the subdiagonal at (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
  }

  static HessenbergMatrix from_dense(const DenseIntMatrix& m) {
    if (m.rows() != m.cols())
      throw std::invalid_argument("HessenbergMatrix: matrix is not square (" +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    return HessenbergMatrix(m.rows(), m.entries());
  }

  std::size_t size() const { return n_; }

  const ExactInt& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  DenseIntMatrix to_dense() const { return DenseIntMatrix(n_, n_, entries_); }

  bool operator==(const HessenbergMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExactInt> entries_;
};

/// Determinants of every leading k x k block, k = 0..k_max, from one pass of
/// the Hessenberg cofactor recurrence (1-indexed):
///
///   det(H_k) = sum_{i=1..k} (-1)^(i-1) * h[k-i+1][k]
///              * (prod of subdiagonal entries h[j+1][j], j = k-i+1 .. k-1)
///              * det(H_{k-i}),                          det(H_0) = 1.
///
/// Each prefix determinant falls out as a byproduct; the whole sweep costs
/// O(k_max^2) big-integer multiplications.
inline std::vector<ExactInt> principal_minors(const HessenbergMatrix& h, std::size_t k_max) {
  if (k_max > h.size())
    throw std::out_of_range("principal_minors: k_max " + std::to_string(k_max) +
                            " exceeds dimension " + std::to_string(h.size()));
  std::vector<ExactInt> dets(k_max + 1);
  dets[0] = 1;
  for (std::size_t k = 1; k <= k_max; ++k) {
    ExactInt acc(0);
    ExactInt band(1);  // running product of subdiagonal entries
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t row = k - i;
      const ExactInt& coeff = h.at(row, k - 1);
      if (coeff != 0) {
        ExactInt term = coeff * band * dets[row];
        if (i % 2 == 1)
          acc += term;
        else
          acc -= term;
      }
      if (row == 0) break;
      band *= h.at(row, row - 1);
      if (band == 0) break;  // every remaining term carries this factor
    }
    dets[k] = std::move(acc);
  }
  return dets;
}

/// det(H) by the Hessenberg cofactor recurrence. The textbook statement for
/// normalized matrices sums to i = n-1; the full Laplace expansion also has
/// the i = n term with coefficient h[1][n], which vanishes for banded inputs
/// but not in general, so the engine always includes it.
inline ExactInt det_hessenberg_recurrence(const HessenbergMatrix& h) {
  return principal_minors(h, h.size()).back();
}

/// det(M) by fraction-free (Bareiss) elimination with row pivoting. Every
/// intermediate division is exact, so the result is exact for any square
/// integer matrix. Independent of the recurrence engine; used to cross-check
/// it.
inline ExactInt det_bareiss(const DenseIntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det_bareiss: matrix is not square (" +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  const std::size_t n = m.rows();
  if (n == 0) return ExactInt(1);
  DenseIntMatrix w = m;
  int sign = 1;
  ExactInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return ExactInt(0);
      for (std::size_t j = k; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  ExactInt det = w.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

}  // namespace catdet

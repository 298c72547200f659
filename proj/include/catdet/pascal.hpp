#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catdet/boundary.hpp"
#include "catdet/combinat.hpp"
#include "catdet/matrix.hpp"

namespace catdet {

/// The deformed Pascal matrix: n x n with entry(i, j) = C(i+1, j-i+1),
/// 0-indexed. Row i carries triangle row i+1 shifted so the subdiagonal
/// entry is C(i+1, 0) = 1; the zero-fill convention empties everything below
/// it, so the result is upper Hessenberg. n = 0 yields the empty matrix,
/// whose determinant is 1.
inline HessenbergMatrix build_deformed_pascal(long long n) {
  if (n < 0)
    throw std::out_of_range("build_deformed_pascal: n must be >= 0, got " + std::to_string(n));
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<ExactInt> entries(dim * dim);
  for (long long i = 0; i < n; ++i)
    for (long long j = std::max<long long>(0, i - 1); j < n; ++j)
      entries[static_cast<std::size_t>(i * n + j)] = binomial(i + 1, j - i + 1);
  return HessenbergMatrix(dim, std::move(entries));
}

/// The Toeplitz matrix with the C(n, .) band: m x m with the band running
/// C(n, 0) = 1 on the subdiagonal, C(n, 1) = n on the diagonal, and
/// C(n, j-i+1) rightwards until the band runs out. For n >= 3 the band is
/// wider than three, so only this orientation (unit subdiagonal, weight
/// spreading right) fits the upper Hessenberg type; the transposed
/// orientation with the band running down the first column denotes the same
/// determinant family, since transposition preserves every leading principal
/// minor, and those minors are all any caller reads.
inline HessenbergMatrix build_toeplitz_hessenberg(long long n, long long m) {
  if (n < 1)
    throw std::out_of_range("build_toeplitz_hessenberg: n must be >= 1, got " + std::to_string(n));
  if (m < 1)
    throw std::out_of_range("build_toeplitz_hessenberg: m must be >= 1, got " + std::to_string(m));
  std::vector<ExactInt> band(static_cast<std::size_t>(m) + 1);
  for (long long d = 0; d <= m; ++d) band[static_cast<std::size_t>(d)] = binomial(n, d);
  std::vector<ExactInt> entries(static_cast<std::size_t>(m * m));
  for (long long i = 0; i < m; ++i)
    for (long long j = std::max<long long>(0, i - 1); j < m; ++j)
      entries[static_cast<std::size_t>(i * m + j)] = band[static_cast<std::size_t>(j - i + 1)];
  return HessenbergMatrix(static_cast<std::size_t>(m), std::move(entries));
}

/// The path-count matrix for the given boundaries: n x n with
/// entry(i, j) = C(upper_i - lower_j + 1, j - i + 1) over the 1-indexed
/// sequences. A negative column offset j - i + 1 forces 0, so the matrix is
/// upper Hessenberg. Entries whose upper index goes negative (possible when
/// lower_j >= upper_i + 2) are zero-filled as well: that extension is what
/// keeps the determinant equal to the path count on boundaries with gaps.
inline HessenbergMatrix build_path_matrix(const BoundaryPair& bounds) {
  const long long n = static_cast<long long>(bounds.size());
  const auto& upper = bounds.upper();
  const auto& lower = bounds.lower();
  std::vector<ExactInt> entries(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i) {
    for (long long j = std::max<long long>(0, i - 1); j < n; ++j) {
      const long long top = upper[static_cast<std::size_t>(i)] -
                            lower[static_cast<std::size_t>(j)] + 1;
      if (top >= 0)
        entries[static_cast<std::size_t>(i * n + j)] = binomial(top, j - i + 1);
    }
  }
  return HessenbergMatrix(static_cast<std::size_t>(n), std::move(entries));
}

/// Pascal's triangle in the square arrangement, entry(r, c) = C(r+c, c),
/// with one column marked. The grid is rows x max(rows, highlight_col + 1),
/// so the marked column always exists. By the symmetry of the square
/// arrangement, row k and column k carry the same sequence.
class PascalTable {
 public:
  PascalTable(std::size_t rows, std::size_t highlight_col)
      : rows_(rows), cols_(std::max(rows, highlight_col + 1)), highlight_col_(highlight_col) {
    if (rows == 0) throw std::out_of_range("PascalTable: rows must be >= 1");
    values_.resize(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        values_[r * cols_ + c] = binomial(static_cast<long long>(r + c), static_cast<long long>(c));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t highlight_col() const { return highlight_col_; }

  const ExactInt& at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  /// The marked column, top to bottom.
  std::vector<ExactInt> highlighted() const {
    std::vector<ExactInt> col(rows_);
    for (std::size_t r = 0; r < rows_; ++r) col[r] = at(r, highlight_col_);
    return col;
  }

  /// Header c0..c{cols-1} plus a final "highlight" column repeating the
  /// marked value of each row.
  std::string to_csv() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < cols_; ++c) out << 'c' << c << ',';
    out << "highlight\n";
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out << to_decimal(at(r, c)) << ',';
      out << to_decimal(at(r, highlight_col_)) << '\n';
    }
    return out.str();
  }

  /// Aligned plain text with the marked column in brackets.
  std::string to_text() const {
    std::vector<std::size_t> width(cols_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        width[c] = std::max(width[c], to_decimal(at(r, c)).size());
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        std::string cell = to_decimal(at(r, c));
        if (c == highlight_col_) cell = "[" + cell + "]";
        const std::size_t target = width[c] + (c == highlight_col_ ? 2 : 0);
        out << (c == 0 ? "" : "  ") << std::string(target - cell.size(), ' ') << cell;
      }
      out << '\n';
    }
    return out.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t highlight_col_ = 0;
  std::vector<ExactInt> values_;
};

inline PascalTable pascal_table(std::size_t rows, std::size_t highlight_col) {
  return PascalTable(rows, highlight_col);
}

}  // namespace catdet

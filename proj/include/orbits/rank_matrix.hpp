#pragma once

#include <string>
#include <vector>

#include "orbits/involution.hpp"

namespace orbits {

/// n x n nonnegative integer matrix, 1-based. Produced rank matrices are
/// strictly upper triangular; arbitrary candidates (e.g. parsed input or
/// meets) are stored densely so that is_valid can inspect every entry.
class RankMatrix {
 public:
  explicit RankMatrix(int n = 1);
  /// Row-major dense rows; throws Error{SizeMismatch} unless square.
  static RankMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  /// Entry (i, j); reads outside 1..n (row n+1, column 0, ...) return 0.
  int at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return 0;
    return cells_[idx(i, j)];
  }
  void set(int i, int j, int value) { cells_.at(idx(i, j)) = value; }

  std::vector<std::vector<int>> rows() const;
  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }
  int n_;
  std::vector<int> cells_;
};

/// Entry (i, j) counts the pairs (a, b) of sigma with i <= a < b <= j.
RankMatrix rank_matrix(const Involution& sigma);

/// True iff R is the rank matrix of some involution: the three-clause
/// characterization (zero lower part, unit steps along rows and columns,
/// and the corner propagation rules) checked literally.
bool is_valid(const RankMatrix& r);

/// Entrywise a <= b. Throws Error{SizeMismatch}.
bool leq(const RankMatrix& a, const RankMatrix& b);
/// sigma' <= sigma in the closure order, i.e. leq(R_{sigma'}, R_sigma).
bool leq(const Involution& lower, const Involution& upper);
/// Strict version of the lifted order.
bool less(const Involution& lower, const Involution& upper);

/// Entrywise minimum. Throws Error{SizeMismatch}.
RankMatrix meet(const RankMatrix& a, const RankMatrix& b);

/// Inverse of rank_matrix: (a, b) is a pair iff the second difference
/// R[a][b] - R[a+1][b] - R[a][b-1] + R[a+1][b-1] equals 1.
/// Throws Error{InvalidRankMatrix} when !is_valid(r).
Involution from_rank_matrix(const RankMatrix& r);

/// Aligned grid, one row per line.
std::string to_grid(const RankMatrix& r);

}  // namespace orbits

#include "orbits/rank_matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "orbits/error.hpp"

namespace orbits {

RankMatrix::RankMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "rank matrix size must be >= 1");
}

RankMatrix RankMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw Error(ErrorKind::SizeMismatch, "empty matrix");
  RankMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n) {
      throw Error(ErrorKind::SizeMismatch, "row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 1; j <= n; ++j) r.set(i, j, rows[i - 1][j - 1]);
  }
  return r;
}

std::vector<std::vector<int>> RankMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = at(i, j);
  return out;
}

RankMatrix rank_matrix(const Involution& sigma) {
  const int n = sigma.n();
  RankMatrix r(n);
  // Mark pair corners, then accumulate: R[i][j] = R[i+1][j] + R[i][j-1]
  // - R[i+1][j-1] + [pair (i, j)].
  std::vector<int> corner(static_cast<std::size_t>(n + 2) * (n + 2), 0);
  for (const auto& p : sigma.pairs()) corner[p.i * (n + 2) + p.j] = 1;
  for (int i = n; i >= 1; --i) {
    for (int j = i + 1; j <= n; ++j) {
      r.set(i, j, r.at(i + 1, j) + r.at(i, j - 1) - r.at(i + 1, j - 1) + corner[i * (n + 2) + j]);
    }
  }
  return r;
}

bool is_valid(const RankMatrix& r) {
  const int n = r.n();
  // (i) zero on and below the diagonal; entries nonnegative.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (r.at(i, j) < 0) return false;
      if (i >= j && r.at(i, j) != 0) return false;
    }
  }
  // (ii) unit steps: moving down a column or left along a row drops by 0 or 1.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int v = r.at(i, j);
      const int below = r.at(i + 1, j);
      const int left = r.at(i, j - 1);
      if (v < below || v > below + 1) return false;
      if (v < left || v > left + 1) return false;
    }
  }
  // (iii) at a corner (i, j) the extra unit propagates: row i stays one above
  // row i+1 from column j on, column j stays one above column j-1 from row i
  // up, and no other pair may start at j or end at i.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int v = r.at(i, j);
      const bool is_corner = v == r.at(i + 1, j) + 1 && v == r.at(i, j - 1) + 1 &&
                             v == r.at(i + 1, j - 1) + 1;
      if (!is_corner) continue;
      for (int k = 1; k <= n; ++k) {
        // (a)
        if (k < j && r.at(i, k) != r.at(i + 1, k)) return false;
        if (k >= j && r.at(i, k) != r.at(i + 1, k) + 1) return false;
        // (b)
        if (k > i && r.at(k, j) != r.at(k, j - 1)) return false;
        if (k <= i && r.at(k, j) != r.at(k, j - 1) + 1) return false;
        // (c)
        if (r.at(j, k) != r.at(j + 1, k)) return false;
        if (r.at(k, i) != r.at(k, i - 1)) return false;
      }
    }
  }
  return true;
}

namespace {
void require_same_size(const RankMatrix& a, const RankMatrix& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::SizeMismatch, "n=" + std::to_string(a.n()) + " vs n=" + std::to_string(b.n()));
  }
}
}  // namespace

bool leq(const RankMatrix& a, const RankMatrix& b) {
  require_same_size(a, b);
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      if (a.at(i, j) > b.at(i, j)) return false;
  return true;
}

bool leq(const Involution& lower, const Involution& upper) {
  if (lower.n() != upper.n()) {
    throw Error(ErrorKind::SizeMismatch, "n=" + std::to_string(lower.n()) + " vs n=" + std::to_string(upper.n()));
  }
  return leq(rank_matrix(lower), rank_matrix(upper));
}

bool less(const Involution& lower, const Involution& upper) {
  return lower != upper && leq(lower, upper);
}

RankMatrix meet(const RankMatrix& a, const RankMatrix& b) {
  require_same_size(a, b);
  RankMatrix out(a.n());
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j) out.set(i, j, std::min(a.at(i, j), b.at(i, j)));
  return out;
}

Involution from_rank_matrix(const RankMatrix& r) {
  if (!is_valid(r)) throw Error(ErrorKind::InvalidRankMatrix, "matrix is not the rank matrix of an involution");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= r.n(); ++a) {
    for (int b = a + 1; b <= r.n(); ++b) {
      if (r.at(a, b) - r.at(a + 1, b) - r.at(a, b - 1) + r.at(a + 1, b - 1) == 1) pairs.emplace_back(a, b);
    }
  }
  return canonicalize(std::move(pairs), r.n());
}

std::string to_grid(const RankMatrix& r) {
  int width = 1;
  for (int i = 1; i <= r.n(); ++i)
    for (int j = 1; j <= r.n(); ++j) width = std::max(width, static_cast<int>(std::to_string(r.at(i, j)).size()));
  std::ostringstream os;
  for (int i = 1; i <= r.n(); ++i) {
    for (int j = 1; j <= r.n(); ++j) {
      if (j > 1) os << ' ';
      os << std::setw(width) << r.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace orbits

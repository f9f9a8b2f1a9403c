#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbits/involution.hpp"

namespace orbits {

/// Two strictly increasing columns partitioning {1..n}. No row condition:
/// this is what Change produces before anyone checks it.
struct ColumnPairArray {
  std::vector<int> col1;
  std::vector<int> col2;

  int n() const { return static_cast<int>(col1.size() + col2.size()); }
  friend auto operator<=>(const ColumnPairArray&, const ColumnPairArray&) = default;
};

/// Standard Young tableau of shape (n-k, k) written column by column:
/// col1 has n-k entries, col2 has k <= n/2 entries, and col1[r] < col2[r]
/// for every row r that has two cells.
class TwoColumnTableau {
 public:
  /// Single-column tableau 1..n.
  explicit TwoColumnTableau(int n = 1);
  /// Throws Error{NotATableau} unless the columns form a valid tableau.
  TwoColumnTableau(std::vector<int> col1, std::vector<int> col2);

  int n() const { return static_cast<int>(col1_.size() + col2_.size()); }
  int k() const { return static_cast<int>(col2_.size()); }
  const std::vector<int>& col1() const { return col1_; }
  const std::vector<int>& col2() const { return col2_; }
  ColumnPairArray columns() const { return {col1_, col2_}; }

  friend auto operator<=>(const TwoColumnTableau&, const TwoColumnTableau&) = default;

 private:
  std::vector<int> col1_;
  std::vector<int> col2_;
};

bool is_tableau(const ColumnPairArray& arr);
/// The array as a tableau when it satisfies the row condition.
std::optional<TwoColumnTableau> as_tableau(const ColumnPairArray& arr);

/// The pairs of sigma_T listed by increasing second entry b_1 < ... < b_k,
/// where i_s is the largest unused first-column entry below b_s.
std::vector<Pair> sigma_T_by_b(const TwoColumnTableau& t);
/// The maximal-dimension involution attached to T.
Involution sigma_T(const TwoColumnTableau& t);

/// Inverse of sigma_T on involutions of maximal dimension k(n-k).
std::optional<TwoColumnTableau> tableau_of(const Involution& sigma);

/// 1-based row of i inside its column. Throws Error{OutOfRange}.
int row_of(const TwoColumnTableau& t, int i);

/// Moves i from the first column to the second and j the other way.
/// Throws Error{NotInColumn}.
ColumnPairArray change(const TwoColumnTableau& t, int i, int j);

/// All tableaux of shape (n-k, k), ordered by second column.
std::vector<TwoColumnTableau> enumerate_tableaux(int n, int k);

/// Tableaux S whose orbit meets that of T in codimension one, read off the
/// second ancestor of every descendant of sigma_T. Sorted.
std::vector<TwoColumnTableau> codim1_partners(const TwoColumnTableau& t);

/// Pairs (i_s, b_s) of the b-ordered sigma_T with b_s > 2s.
std::vector<Pair> change_candidates_low(const TwoColumnTableau& t);

struct HighCandidate {
  int a = 0;
  /// Admissible second-column partners b_p of a, ascending.
  std::vector<int> partners;
};

/// For each a in the first column with a - 1 = b_t in the second: the
/// entries b_p with b_p = a - 1, or with b_p < a and {b_p + 1, ..., a - 1}
/// equal to the set of entries of the pairs p < q <= t in b-order. Entries
/// with an empty partner set are omitted.
std::vector<HighCandidate> change_candidates_high(const TwoColumnTableau& t);

/// Union of Change(T, i, j) over both candidate rules, as tableaux. Sorted.
std::vector<TwoColumnTableau> rule_partners(const TwoColumnTableau& t);

/// "1,2,3,6|4,5,7,8"; an empty second column is written "1,2,3|".
std::string to_string(const ColumnPairArray& arr);
std::string to_string(const TwoColumnTableau& t);
/// Throws Error{Parse} or Error{NotATableau}.
TwoColumnTableau parse_tableau(std::string_view text);

}  // namespace orbits

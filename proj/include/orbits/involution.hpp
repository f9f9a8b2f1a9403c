#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbits {

/// One 2-cycle (i, j) of an involution, always stored with i < j.
struct Pair {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
  int gap() const { return j - i; }
};

/// An involution of S_n, held as disjoint 2-cycles in canonical form:
/// each pair has i < j and the pairs are sorted by first entry.
///
/// Instances are immutable values. The only way to build one from raw
/// data is through canonicalize() (or the parsing helpers that call it),
/// so every Involution observed by the rest of the library is canonical.
class Involution {
 public:
  /// Identity involution of S_n.
  explicit Involution(int n = 1);

  int n() const { return n_; }
  /// Number of 2-cycles (the length L, not the Coxeter length).
  int length() const { return static_cast<int>(pairs_.size()); }
  bool is_identity() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& pair(std::size_t s) const { return pairs_.at(s); }

  /// Image of x under the involution (x itself when x is a fixed point).
  int image(int x) const;
  bool in_support(int x) const { return image(x) != x; }
  /// Index of the pair containing x, if any.
  std::optional<std::size_t> pair_index_of(int x) const;

  friend bool operator==(const Involution&, const Involution&) = default;
  /// Ordering used for deterministic output: by n, then lexicographic on the
  /// flattened canonical pair list (shorter prefix first).
  friend std::strong_ordering operator<=>(const Involution& a, const Involution& b);

 private:
  friend Involution canonicalize(std::vector<std::pair<int, int>>, int);
  Involution(int n, std::vector<Pair> pairs);

  int n_;
  std::vector<Pair> pairs_;
};

/// Strictly-upper 0/1 matrix of an involution: a partial permutation matrix.
struct UpperMatrix01 {
  int n = 0;
  std::vector<Pair> ones;

  bool at(int row, int col) const;
  friend bool operator==(const UpperMatrix01&, const UpperMatrix01&) = default;
};

/// The pairs of an involution that fit inside a window [i, j].
struct Projection {
  int from = 0;
  int to = 0;
  /// Kept pairs in the ambient indexing.
  std::vector<Pair> kept;
  /// The same pairs re-indexed to 1..(to - from + 1).
  Involution window;
};

/// Builds the canonical involution; pairs may come in any order and each
/// pair's entries in either order.
/// Throws Error{DuplicateEntry} or Error{OutOfRange}.
Involution canonicalize(std::vector<std::pair<int, int>> pairs, int n);

/// Per-pair statistic q_s: #{p : i_p < i_s, j_p < j_s} + #{p : j_p < i_s}.
std::vector<int> q_values(const Involution& sigma);

/// Dimension of the B-orbit attached to sigma:
/// k n - sum(j_s - i_s) - sum(q_s).
int dimension(const Involution& sigma);

/// Upper bound k(n - k) attained exactly by the tableau involutions.
inline int max_dimension(int n, int k) { return k * (n - k); }

UpperMatrix01 strict_upper_matrix(const Involution& sigma);

/// Sorted entries that appear in some pair.
std::vector<int> support(const Involution& sigma);
/// Sorted fixed points, {1..n} minus the support.
std::vector<int> support_complement(const Involution& sigma);

/// Pairs (a, b) with from <= a and b <= to. Throws Error{BadWindow}.
Projection project(const Involution& sigma, int from, int to);

/// Removes pair number s (0-based, canonical order).
/// Throws Error{IndexOutOfRange}.
Involution delete_pair(const Involution& sigma, std::size_t s);

/// The minimal length-k involution (1, n-k+1)(2, n-k+2)...(k, n).
/// Throws Error{BadRank} unless 0 <= k <= n/2.
Involution sigma_o(int n, int k);

/// Visits every involution of S_n (or only those of length k) exactly once,
/// in lexicographic order on the flattened canonical pair list.
void for_each_involution(int n, std::optional<int> k,
                         const std::function<void(const Involution&)>& visit);

std::vector<Involution> enumerate_involutions(int n, std::optional<int> k = std::nullopt);

/// Number of involutions of S_n via a(n) = a(n-1) + (n-1) a(n-2).
long long involution_count(int n);

/// "(i1,j1)(i2,j2)..." with no spaces, or "id" for the identity.
std::string to_string(const Involution& sigma);

/// Parses the cycle notation; whitespace is ignored, "id" or "" is the
/// identity. Throws Error{Parse} on malformed text.
Involution parse_involution(std::string_view text, int n);

/// Applies an elementary transformation of type I: integer p of the support
/// is replaced by the fixed point q. The result is recanonicalized.
Involution replace_entry(const Involution& sigma, int p, int q);

/// Applies an elementary transformation of type II: integers p and q, taken
/// from different pairs, trade places. The result is recanonicalized.
Involution exchange_entries(const Involution& sigma, int p, int q);

}  // namespace orbits

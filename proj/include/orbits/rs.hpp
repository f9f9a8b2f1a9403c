#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbits/tableau.hpp"

namespace orbits {

/// Standard Young tableau in row convention (English notation).
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  int size() const;
  std::vector<int> shape() const;
  bool is_standard() const;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

/// Rows are the columns of t: shape (n-k, k).
StandardTableau to_standard(const TwoColumnTableau& t);

/// Row insertion of word[0], word[1], ...: returns (insertion, recording).
/// Throws Error{NotAPermutation}.
std::pair<StandardTableau, StandardTableau> rs_pair(const std::vector<int>& word);

/// The word w with rs_pair(w) = (p, q). Throws Error{ShapeMismatch}.
std::vector<int> rs_word(const StandardTableau& p, const StandardTableau& q);

/// Swaps the values m and m + 1 in a one-line word.
std::vector<int> apply_adjacent(std::vector<int> word, int m);

struct RsWitness {
  TwoColumnTableau p;
  int m = 0;
};

/// First (P, m), with P in enumeration order and m ascending, such that
/// rs_word(T, P) = s_m rs_word(S, P). Throws Error{ShapeMismatch}.
std::optional<RsWitness> find_rs_witness(const TwoColumnTableau& t, const TwoColumnTableau& s);

std::string to_string(const StandardTableau& t);
std::string to_string(const std::vector<int>& word);

}  // namespace orbits

// Seeded spot checks beyond the exhaustive ranges.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "orbits/moves.hpp"
#include "orbits/poset.hpp"
#include "orbits/rank_matrix.hpp"
#include "orbits/tableau.hpp"

using namespace orbits;

namespace {

Involution random_involution(std::mt19937& rng, int n) {
  std::vector<int> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 1);
  std::shuffle(pts.begin(), pts.end(), rng);
  const int k = std::uniform_int_distribution<int>(0, n / 2)(rng);
  std::vector<std::pair<int, int>> raw;
  for (int s = 0; s < k; ++s) raw.emplace_back(pts[2 * s], pts[2 * s + 1]);
  return canonicalize(std::move(raw), n);
}

}  // namespace

TEST_CASE("rank matrix round trip for n up to 12") {
  std::mt19937 rng(20240607);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(8, 12)(rng);
    const auto s = random_involution(rng, n);
    const auto r = rank_matrix(s);
    CHECK(is_valid(r));
    CHECK(from_rank_matrix(r) == s);
    CHECK(dimension(s) <= max_dimension(n, s.length()));
  }
}

TEST_CASE("moves at larger n keep their direction and dimension drop") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(8, 11)(rng);
    const auto s = random_involution(rng, n);
    for (const auto& d : descendants(s)) {
      CHECK(less(d, s));
      CHECK(dimension(s) - dimension(d) == 1);
      const auto up = ancestors(d);
      CHECK(std::binary_search(up.begin(), up.end(), s));
    }
    for (const auto& c : cover(s)) CHECK(dimension(s) - dimension(c) == 1);
  }
}

TEST_CASE("meets of random pairs at n=9") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_involution(rng, 9);
    auto b = random_involution(rng, 9);
    if (a.length() != b.length()) continue;
    const auto r = intersect(a, b);
    CHECK(r.irreducible == is_valid(r.meet));
    for (const auto& c : r.components) {
      CHECK(leq(rank_matrix(c), r.meet));
      CHECK(leq(c, a));
      CHECK(leq(c, b));
    }
  }
}

TEST_CASE("tableau round trip at n=10") {
  for (int k = 0; k <= 5; ++k)
    for (const auto& t : enumerate_tableaux(10, k)) {
      const auto s = sigma_T(t);
      CHECK(dimension(s) == max_dimension(10, k));
      CHECK(tableau_of(s) == t);
      CHECK(ancestors(s).empty());
    }
}

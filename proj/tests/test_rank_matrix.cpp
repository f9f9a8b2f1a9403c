#include <doctest.h>

#include <algorithm>
#include <string>

#include "orbits/error.hpp"
#include "orbits/involution.hpp"
#include "orbits/rank_matrix.hpp"

using namespace orbits;

namespace {

const std::vector<std::vector<int>> kSigmaRows = {
    {0, 0, 0, 1, 2}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
const std::vector<std::vector<int>> kSigmaPrimeRows = {
    {0, 0, 0, 1, 2}, {0, 0, 0, 1, 2}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
const std::vector<std::vector<int>> kMeetRows = {
    {0, 0, 0, 1, 2}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};

}  // namespace

TEST_CASE("rank matrices of the n=5 reducible pair") {
  const auto a = rank_matrix(parse_involution("(1,5)(3,4)", 5));
  const auto b = rank_matrix(parse_involution("(2,4)(3,5)", 5));
  CHECK(a.rows() == kSigmaRows);
  CHECK(b.rows() == kSigmaPrimeRows);
  const auto m = meet(a, b);
  CHECK(m.rows() == kMeetRows);
  CHECK_FALSE(is_valid(m));
  CHECK(is_valid(a));
  CHECK(is_valid(b));
}

TEST_CASE("rank matrix basics") {
  CHECK(rank_matrix(Involution(4)) == RankMatrix(4));
  CHECK(is_valid(RankMatrix(6)));
  CHECK(from_rank_matrix(RankMatrix(4)).is_identity());
  const auto r = rank_matrix(parse_involution("(1,5)(3,4)", 5));
  CHECK(to_string(from_rank_matrix(r)) == "(1,5)(3,4)");
  CHECK(meet(r, r) == r);
  CHECK(meet(r, RankMatrix(5)) == RankMatrix(5));
  CHECK(leq(r, r));
  CHECK(r.at(0, 3) == 0);
  CHECK(r.at(6, 5) == 0);
}

TEST_CASE("entry (1,n) is the length") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n)) CHECK(rank_matrix(s).at(1, n) == s.length());
}

TEST_CASE("closure order examples") {
  const auto a = parse_involution("(1,3)", 3);
  const auto b = parse_involution("(1,2)", 3);
  CHECK(leq(a, b));
  CHECK_FALSE(leq(b, a));
  CHECK(less(a, b));
  CHECK_FALSE(less(a, a));
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n))
      for (int k = 0; k <= s.length(); ++k) CHECK(leq(sigma_o(n, k), s));
}

TEST_CASE("size mismatches and invalid input") {
  CHECK_THROWS_AS(leq(RankMatrix(3), RankMatrix(4)), Error);
  CHECK_THROWS_AS(meet(RankMatrix(3), RankMatrix(4)), Error);
  CHECK_THROWS_AS(RankMatrix::from_rows({{0, 1}, {0}}), Error);
  auto bad = RankMatrix(3);
  bad.set(1, 3, 2);
  CHECK_FALSE(is_valid(bad));
  CHECK_THROWS_AS(from_rank_matrix(bad), Error);
  auto lower = RankMatrix(3);
  lower.set(3, 1, 1);
  CHECK_FALSE(is_valid(lower));
}

TEST_CASE("round trip and validity on S_7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n)) {
      const auto r = rank_matrix(s);
      CHECK(is_valid(r));
      CHECK(from_rank_matrix(r) == s);
    }
}

TEST_CASE("grid rendering") {
  const auto g = to_grid(rank_matrix(parse_involution("(1,2)", 2)));
  CHECK(g.find('1') != std::string::npos);
  CHECK(std::count(g.begin(), g.end(), '\n') == 2);
}

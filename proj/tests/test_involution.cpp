#include <doctest.h>

#include <algorithm>

#include "orbits/error.hpp"
#include "orbits/involution.hpp"
#include "orbits/rank_matrix.hpp"

using namespace orbits;

namespace {
Involution inv(const char* text, int n) { return parse_involution(text, n); }
}  // namespace

TEST_CASE("canonicalize sorts pairs and orders entries") {
  CHECK(to_string(canonicalize({{3, 4}, {1, 8}, {6, 7}, {2, 5}}, 8)) == "(1,8)(2,5)(3,4)(6,7)");
  CHECK(to_string(canonicalize({{5, 1}}, 5)) == "(1,5)");
  CHECK(canonicalize({}, 3).is_identity());
  CHECK(to_string(Involution(3)) == "id");
}

TEST_CASE("canonicalize rejects bad input") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind_of([] { canonicalize({{1, 2}, {2, 3}}, 4); }) == ErrorKind::DuplicateEntry);
  CHECK(kind_of([] { canonicalize({{1, 5}}, 4); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { canonicalize({{0, 2}}, 4); }) == ErrorKind::OutOfRange);
  CHECK_THROWS_AS(parse_involution("(1,2", 3), Error);
  CHECK_THROWS_AS(parse_involution("(1,2,3)", 3), Error);
}

TEST_CASE("q statistic") {
  CHECK(q_values(inv("(1,6)(3,4)(5,7)", 7)) == std::vector<int>{0, 0, 3});
  CHECK(q_values(inv("(1,5)(2,6)(3,7)", 7)) == std::vector<int>{0, 1, 2});
  CHECK(q_values(Involution(5)).empty());
}

TEST_CASE("dimension") {
  CHECK(dimension(sigma_o(7, 3)) == 6);
  CHECK(dimension(inv("(1,8)(2,5)(3,4)(6,7)", 8)) == 16);
  CHECK(dimension(inv("(1,6)(3,4)(5,7)", 7)) == 10);
  CHECK(dimension(Involution(6)) == 0);
  CHECK(dimension(inv("(1,2)(3,4)", 4)) == 4);
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; 2 * k <= n; ++k) CHECK(dimension(sigma_o(n, k)) == k * (k + 1) / 2);
}

TEST_CASE("strict upper matrix and support") {
  const auto m = strict_upper_matrix(inv("(1,5)(3,4)", 5));
  CHECK(m.at(1, 5));
  CHECK(m.at(3, 4));
  CHECK_FALSE(m.at(1, 4));
  CHECK(strict_upper_matrix(Involution(3)).ones.empty());
  CHECK(support_complement(inv("(2,6)(3,5)(7,9)(8,10)", 11)) == std::vector<int>{1, 4, 11});
  CHECK(support_complement(Involution(3)) == std::vector<int>{1, 2, 3});
  CHECK(support_complement(sigma_o(4, 2)).empty());
  CHECK(support(inv("(1,5)(3,4)", 5)) == std::vector<int>{1, 3, 4, 5});
}

TEST_CASE("project") {
  const auto s = inv("(1,6)(3,4)(5,7)", 7);
  const auto p = project(s, 2, 6);
  CHECK(p.kept == std::vector<Pair>{{3, 4}});
  CHECK(to_string(p.window) == "(2,3)");
  CHECK(project(s, 1, 7).window == s);
  CHECK(project(s, 2, 3).kept.empty());
  CHECK_THROWS_AS(project(s, 3, 3), Error);
  const auto r = rank_matrix(s);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) CHECK(project(s, i, j).window.length() == r.at(i, j));
}

TEST_CASE("delete_pair") {
  const auto s = inv("(1,6)(3,4)(5,7)", 7);
  CHECK(to_string(delete_pair(s, 1)) == "(1,6)(5,7)");
  CHECK(delete_pair(inv("(1,2)", 2), 0).is_identity());
  CHECK_THROWS_AS(delete_pair(s, 3), Error);

  const auto t = inv("(1,5)(3,4)", 5);
  const auto big = rank_matrix(t);
  const auto small = rank_matrix(delete_pair(t, 1));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(big.at(i, j) - small.at(i, j) == (i <= 3 && j >= 4 ? 1 : 0));
}

TEST_CASE("sigma_o") {
  CHECK(to_string(sigma_o(7, 3)) == "(1,5)(2,6)(3,7)");
  CHECK(sigma_o(5, 0).is_identity());
  CHECK(to_string(sigma_o(4, 2)) == "(1,3)(2,4)");
  CHECK_THROWS_AS(sigma_o(4, 3), Error);
  CHECK_THROWS_AS(sigma_o(4, -1), Error);
}

TEST_CASE("enumeration") {
  const auto three = enumerate_involutions(3);
  REQUIRE(three.size() == 4);
  CHECK(three[0].is_identity());
  CHECK(to_string(three[1]) == "(1,2)");
  CHECK(to_string(three[2]) == "(1,3)");
  CHECK(to_string(three[3]) == "(2,3)");
  CHECK(enumerate_involutions(4, 2).size() == 3);
  CHECK(enumerate_involutions(1).size() == 1);

  const long long expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 1; n <= 8; ++n) {
    CHECK(involution_count(n) == expected[n]);
    const auto all = enumerate_involutions(n);
    CHECK(static_cast<long long>(all.size()) == expected[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("parse and print round trip") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n)) CHECK(parse_involution(to_string(s), n) == s);
  CHECK(parse_involution(" (3, 4) (1,8)", 8) == inv("(1,8)(3,4)", 8));
  CHECK(parse_involution("", 4).is_identity());
}

TEST_CASE("elementary transformations") {
  const auto s = inv("(2,6)(3,5)(7,9)(8,10)", 11);
  CHECK(to_string(replace_entry(s, 2, 1)) == "(1,6)(3,5)(7,9)(8,10)");
  CHECK(to_string(exchange_entries(inv("(1,3)(2,4)(5,9)(6,10)(7,8)", 10), 4, 5)) == "(1,3)(2,5)(4,9)(6,10)(7,8)");
}

TEST_CASE("dimension bound and leading q value") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : enumerate_involutions(n)) {
      CHECK(dimension(s) <= max_dimension(n, s.length()));
      CHECK(q_values(s).empty() == s.is_identity());
      if (!s.is_identity()) CHECK(q_values(s).front() == 0);
    }
}

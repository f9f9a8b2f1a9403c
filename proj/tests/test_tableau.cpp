#include <doctest.h>

#include <algorithm>
#include <string>

#include "orbits/error.hpp"
#include "orbits/tableau.hpp"

using namespace orbits;

namespace {

TwoColumnTableau tab(const char* text) { return parse_tableau(text); }

std::vector<std::string> names(const std::vector<TwoColumnTableau>& v) {
  std::vector<std::string> out;
  for (const auto& t : v) out.push_back(to_string(t));
  return out;
}

// Hook-length count of standard tableaux of shape (n-k, k).
long long hook_count(int n, int k) {
  long long num = 1, den = 1;
  for (int x = 2; x <= n; ++x) num *= x;
  for (int c = 1; c <= n - k; ++c) den *= (c <= k ? (n - k - c + 2) : (n - k - c + 1));
  for (int c = 1; c <= k; ++c) den *= (k - c + 1);
  return num / den;
}

}  // namespace

TEST_CASE("sigma_T examples") {
  const auto t = tab("1,2,3,6|4,5,7,8");
  CHECK(to_string(sigma_T(t)) == "(1,8)(2,5)(3,4)(6,7)");
  CHECK(dimension(sigma_T(t)) == 16);
  CHECK(sigma_T(TwoColumnTableau(5)).is_identity());
  CHECK(to_string(sigma_T(tab("1,3|2,4"))) == "(1,2)(3,4)");
  CHECK(sigma_T_by_b(t) == std::vector<Pair>{{3, 4}, {2, 5}, {6, 7}, {1, 8}});
}

TEST_CASE("tableau_of") {
  CHECK(tableau_of(parse_involution("(1,8)(2,5)(3,4)(6,7)", 8)) == tab("1,2,3,6|4,5,7,8"));
  CHECK_FALSE(tableau_of(sigma_o(5, 2)));
  CHECK(tableau_of(Involution(3)) == TwoColumnTableau(3));
}

TEST_CASE("bijection with top-dimension involutions") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const auto tabs = enumerate_tableaux(n, k);
      CHECK(static_cast<long long>(tabs.size()) == hook_count(n, k));
      std::vector<Involution> from_tabs;
      for (const auto& t : tabs) {
        const auto s = sigma_T(t);
        CHECK(tableau_of(s) == t);
        for (const auto& p : s.pairs()) CHECK(p.gap() % 2 == 1);
        from_tabs.push_back(s);
      }
      std::vector<Involution> top;
      for (const auto& s : enumerate_involutions(n, k))
        if (dimension(s) == max_dimension(n, k)) top.push_back(s);
      std::sort(from_tabs.begin(), from_tabs.end());
      CHECK(from_tabs == top);
    }
  CHECK(enumerate_tableaux(6, 3).size() == 5);
  CHECK_THROWS_AS(enumerate_tableaux(5, 3), Error);
}

TEST_CASE("row_of and change") {
  const auto t = tab("1,2,3,6|4,5,7,8");
  CHECK(row_of(t, 6) == 4);
  CHECK(row_of(t, 4) == 1);
  CHECK(row_of(t, 1) == 1);
  CHECK_THROWS_AS(row_of(t, 9), Error);

  const auto c = change(t, 3, 4);
  CHECK(c.col1 == std::vector<int>{1, 2, 4, 6});
  CHECK(c.col2 == std::vector<int>{3, 5, 7, 8});
  CHECK(is_tableau(c));
  CHECK_FALSE(is_tableau(change(t, 1, 8)));
  CHECK(change(*as_tableau(c), 4, 3) == t.columns());
  CHECK_THROWS_AS(change(t, 4, 3), Error);
}

TEST_CASE("parsing") {
  CHECK(to_string(tab("1,2,3|")) == "1,2,3|");
  CHECK(tab("1,2,3") == TwoColumnTableau(3));
  CHECK(tab(" 1, 3 | 2, 4 ") == tab("1,3|2,4"));
  CHECK_THROWS_AS(tab("1,2|3|4"), Error);
  CHECK_THROWS_AS(tab("2,3|1,4"), Error);
  CHECK_THROWS_AS(tab("1,x|2"), Error);
  CHECK_THROWS_AS(tab("1|2,3"), Error);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const auto& t : enumerate_tableaux(n, k)) CHECK(parse_tableau(to_string(t)) == t);
}

TEST_CASE("codim-one partners") {
  CHECK(names(codim1_partners(tab("1,2|3,4"))) == std::vector<std::string>{"1,3|2,4"});
  CHECK(names(codim1_partners(tab("1,2|3"))) == std::vector<std::string>{"1,3|2"});
  CHECK(codim1_partners(TwoColumnTableau(4)).empty());
}

TEST_CASE("change candidates") {
  CHECK(change_candidates_low(tab("1,2,3,6|4,5,7,8")) == std::vector<Pair>{{3, 4}, {2, 5}, {6, 7}});
  CHECK(change_candidates_low(tab("1,3|2,4")).empty());

  const auto high = change_candidates_high(tab("1,3|2,4"));
  REQUIRE(high.size() == 1);
  CHECK(high[0].a == 3);
  CHECK(high[0].partners == std::vector<int>{2});
  CHECK(names(rule_partners(tab("1,3|2,4"))) == std::vector<std::string>{"1,2|3,4"});

  const auto big = change_candidates_high(tab("1,2,3,6|4,5,7,8"));
  REQUIRE(big.size() == 1);
  CHECK(big[0].a == 6);
  CHECK(big[0].partners == std::vector<int>{5});

  // Entries whose predecessor is in the first column contribute nothing.
  for (const auto& h : change_candidates_high(tab("1,2,4|3,5,6"))) CHECK(h.a != 2);

  // The bounded reading of the second clause: 5 pairs with 2 across (3,4).
  const auto bounded = change_candidates_high(tab("1,3,5|2,4,6"));
  REQUIRE(bounded.size() == 2);
  CHECK(bounded[1].a == 5);
  CHECK(bounded[1].partners == std::vector<int>{2, 4});
}

TEST_CASE("odd-b candidates always give tableaux") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (const auto& t : enumerate_tableaux(n, k)) {
        const auto b = sigma_T_by_b(t);
        for (std::size_t s = 0; s < b.size(); ++s)
          if (b[s].j % 2 == 1) CHECK(is_tableau(change(t, b[s].i, b[s].j)));
      }
}

TEST_CASE("rule partners match partners via descendants") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (const auto& t : enumerate_tableaux(n, k)) {
        const auto partners = codim1_partners(t);
        CHECK(rule_partners(t) == partners);
        for (const auto& s : partners) {
          const auto back = codim1_partners(s);
          CHECK(std::find(back.begin(), back.end(), t) != back.end());
        }
      }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbits/error.hpp"
#include "orbits/moves.hpp"
#include "orbits/rank_matrix.hpp"

using namespace orbits;

namespace {

Involution inv(const char* text, int n) { return parse_involution(text, n); }

std::size_t at(const Involution& s, int i) { return *s.pair_index_of(i); }

std::vector<std::string> names(const std::vector<Involution>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(to_string(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::string opt(const std::optional<Involution>& s) { return s ? to_string(*s) : "none"; }

}  // namespace

TEST_CASE("vertical moves") {
  const auto s = inv("(2,6)(3,5)(7,9)(8,10)", 11);
  CHECK(opt(move_down(s, at(s, 2))) == "(1,6)(3,5)(7,9)(8,10)");
  CHECK(opt(move_down(s, at(s, 3))) == "none");
  CHECK(opt(move_down(s, at(s, 7))) == "(2,6)(3,5)(4,9)(8,10)");
  CHECK(opt(move_down(s, at(s, 8))) == "(2,6)(3,5)(4,10)(7,9)");
  CHECK(opt(move_up(s, at(s, 2))) == "(3,5)(4,6)(7,9)(8,10)");
  CHECK(opt(move_up(s, at(s, 7))) == "none");
  CHECK_THROWS_AS(move_down(s, 4), Error);
}

TEST_CASE("horizontal moves") {
  const auto s = inv("(2,6)(3,5)(7,9)(8,10)", 11);
  CHECK(opt(move_right(s, at(s, 2))) == "(2,11)(3,5)(7,9)(8,10)");
  CHECK(opt(move_right(s, at(s, 3))) == "none");
  CHECK(opt(move_right(s, at(s, 8))) == "(2,6)(3,5)(7,9)(8,11)");
  CHECK(opt(move_left(s, at(s, 2))) == "(2,4)(3,5)(7,9)(8,10)");
  CHECK(opt(move_left(s, at(s, 7))) == "none");
  CHECK(opt(move_left(s, at(s, 3))) == "(2,6)(3,4)(7,9)(8,10)");
}

TEST_CASE("crossing moves") {
  const auto s = inv("(1,3)(2,4)(5,9)(6,10)(7,8)", 10);
  using V = std::vector<std::string>;
  CHECK(names(cross_down(s, at(s, 5))) == V{"(1,3)(2,5)(4,9)(6,10)(7,8)", "(1,5)(2,4)(3,9)(6,10)(7,8)"});
  CHECK(cross_down(s, at(s, 2)).empty());
  CHECK(cross_down(s, at(s, 7)).empty());
  CHECK(names(cross_up(s, at(s, 2))) == V{"(1,2)(3,4)(5,9)(6,10)(7,8)"});
  CHECK(cross_up(s, at(s, 5)).empty());
  CHECK(names(cross_up(s, at(s, 6))) == V{"(1,3)(2,4)(5,6)(7,8)(9,10)"});
  CHECK(cross_up(s, at(s, 7)).empty());
}

TEST_CASE("swap moves") {
  const auto s = inv("(1,7)(2,5)(3,8)(4,6)", 8);
  using V = std::vector<std::string>;
  CHECK(names(swap_down(s, at(s, 1))) == V{"(1,5)(2,7)(3,8)(4,6)", "(1,6)(2,5)(3,8)(4,7)"});
  CHECK(swap_down(s, at(s, 2)).empty());
  CHECK(names(swap_down(s, at(s, 3))) == V{"(1,7)(2,5)(3,6)(4,8)"});
  CHECK(names(swap_up(s, at(s, 1))) == V{"(1,8)(2,5)(3,7)(4,6)"});
  CHECK(names(swap_up(s, at(s, 2))) == V{"(1,7)(2,6)(3,8)(4,5)", "(1,7)(2,8)(3,5)(4,6)"});
  CHECK(swap_up(s, at(s, 3)).empty());
  CHECK(swap_up(s, at(s, 4)).empty());
}

TEST_CASE("descendants and ancestors on small cases") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) CHECK(descendants(sigma_o(n, k)).empty());
  CHECK(descendants(Involution(5)).empty());
  CHECK(ancestors(Involution(5)).empty());
  CHECK(names(descendants(inv("(1,4)(2,3)", 4))) == std::vector<std::string>{"(1,3)(2,4)"});
  CHECK(names(ancestors(inv("(1,3)(2,4)", 4))) == std::vector<std::string>{"(1,2)(3,4)", "(1,4)(2,3)"});
}

TEST_CASE("cover") {
  CHECK(names(cover(inv("(1,2)", 2))) == std::vector<std::string>{"id"});
  CHECK(cover(Involution(3)).empty());
  CHECK(names(cover(inv("(1,2)", 3))) == std::vector<std::string>{"(1,3)"});
  CHECK(names(cover(inv("(1,3)", 3))) == std::vector<std::string>{"id"});
}

TEST_CASE("direction, dimension drop and inverse laws") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n)) {
      std::set<Involution> seen;
      for (const auto& m : descendant_moves(s)) {
        CHECK(less(m.target, s));
        CHECK(dimension(s) - dimension(m.target) == 1);
        CHECK(seen.insert(m.target).second);
      }
      for (const auto& m : ancestor_moves(s)) {
        CHECK(less(s, m.target));
        CHECK(dimension(m.target) - dimension(s) == 1);
      }
      for (std::size_t p = 0; p < static_cast<std::size_t>(s.length()); ++p) {
        if (auto d = move_down(s, p)) {
          bool found = false;
          for (std::size_t q = 0; q < static_cast<std::size_t>(d->length()); ++q)
            if (auto u = move_up(*d, q); u && *u == s) found = true;
          CHECK(found);
        }
        if (auto r = move_right(s, p)) {
          bool found = false;
          for (std::size_t q = 0; q < static_cast<std::size_t>(r->length()); ++q)
            if (auto l = move_left(*r, q); l && *l == s) found = true;
          CHECK(found);
        }
      }
    }
}

TEST_CASE("cross_down side conditions hold for emitted moves") {
  for (int n = 4; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n))
      for (std::size_t t = 0; t < static_cast<std::size_t>(s.length()); ++t)
        for (std::size_t p = 0; p < t; ++p) {
          const auto& a = s.pair(p);
          const auto& b = s.pair(t);
          if (a.j >= b.i) continue;
          const auto moved = exchange_entries(s, a.j, b.i);
          const auto emitted = cross_down(s, t);
          if (std::find(emitted.begin(), emitted.end(), moved) != emitted.end())
            CHECK(cross_down_side_conditions(s, p, t));
        }
}

#include <doctest.h>

#include <algorithm>
#include <string>

#include "orbits/error.hpp"
#include "orbits/poset.hpp"

using namespace orbits;

namespace {

Involution inv(const char* text, int n) { return parse_involution(text, n); }

std::vector<std::string> names(const std::vector<Involution>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

std::vector<std::string> edge_names(const std::vector<PosetEdge>& edges) {
  std::vector<std::string> out;
  for (const auto& e : edges) out.push_back(to_string(e.upper) + ">" + to_string(e.lower));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(names(closure(inv("(1,3)", 3))) == std::vector<std::string>{"id", "(1,3)"});
  CHECK(names(closure(Involution(4))) == std::vector<std::string>{"id"});
  CHECK(names(closure(inv("(1,2)", 3))) == std::vector<std::string>{"id", "(1,2)", "(1,3)"});
}

TEST_CASE("closure by descent equals closure by filter") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_involutions(n);
    for (const auto& s : all) {
      std::vector<Involution> filtered;
      for (const auto& t : all)
        if (leq(t, s)) filtered.push_back(t);
      CHECK(closure(s) == filtered);
    }
  }
}

TEST_CASE("intersect: reducible n=5 example") {
  const auto r = intersect(inv("(1,5)(3,4)", 5), inv("(2,4)(3,5)", 5));
  CHECK_FALSE(r.irreducible);
  CHECK(names(r.components) == std::vector<std::string>{"(1,4)(3,5)", "(1,5)(2,4)"});
  CHECK(r.component_dims == std::vector<int>{4, 4});
  CHECK(r.equidimensional);
  CHECK(r.codim == 1);
  CHECK_FALSE(is_valid(r.meet));
}

TEST_CASE("intersect: small irreducible cases") {
  const auto s = inv("(1,5)(3,4)", 5);
  const auto self = intersect(s, s);
  CHECK(self.irreducible);
  CHECK(self.components == std::vector<Involution>{s});
  CHECK(self.codim == 0);

  const auto r = intersect(inv("(1,4)(2,3)", 4), inv("(1,2)(3,4)", 4));
  CHECK(r.irreducible);
  CHECK(names(r.components) == std::vector<std::string>{"(1,3)(2,4)"});
  CHECK(r.codim == 1);
}

TEST_CASE("intersect errors and forcing") {
  CHECK_THROWS_AS(intersect(inv("(1,2)", 3), inv("(1,2)", 4)), Error);
  CHECK_THROWS_AS(intersect(inv("(1,2)", 4), inv("(1,2)(3,4)", 4)), Error);
  const auto forced = intersect(inv("(1,2)", 4), inv("(1,2)(3,4)", 4), {.force = true});
  CHECK(forced.outside_scope);
  CHECK(names(forced.components) == std::vector<std::string>{"(1,2)"});
  CHECK_THROWS_AS(intersect(inv("(1,2)", 6), inv("(1,3)", 6), {.max_n = 5}), Error);
}

TEST_CASE("meet validity decides irreducibility") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const auto layer = enumerate_involutions(n, k);
      for (std::size_t a = 0; a < layer.size(); ++a)
        for (std::size_t b = a; b < layer.size(); ++b) {
          const auto r = intersect(layer[a], layer[b]);
          CHECK(r.irreducible == is_valid(r.meet));
          if (r.irreducible) CHECK(rank_matrix(r.components.front()) == r.meet);
        }
    }
}

TEST_CASE("codim and depth") {
  CHECK(codim(inv("(1,2)", 2), Involution(2)) == 1);
  CHECK(codim(inv("(1,2)", 3), inv("(1,3)", 3)) == 1);
  CHECK_THROWS_AS(codim(inv("(1,3)", 3), inv("(1,2)", 3)), Error);
  CHECK(codim(inv("(1,8)(2,5)(3,4)(6,7)", 8), sigma_o(8, 4)) == 16 - 10);
  CHECK(depth(inv("(1,2)", 2), 0) == 1);
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) CHECK(depth(sigma_o(n, k), k) == 0);
  CHECK_THROWS_AS(depth(inv("(1,2)", 4), 2), Error);
  CHECK_THROWS_AS(depth(inv("(1,2)", 4), -1), Error);
}

TEST_CASE("hasse diagrams") {
  CHECK(edge_names(hasse(2)) == std::vector<std::string>{"(1,2)>id"});
  CHECK(edge_names(hasse(3)) == std::vector<std::string>{"(1,2)>(1,3)", "(1,3)>id", "(2,3)>(1,3)"});
  CHECK(edge_names(hasse(4, 2)) == std::vector<std::string>{"(1,2)(3,4)>(1,3)(2,4)", "(1,4)(2,3)>(1,3)(2,4)"});
  CHECK_THROWS_AS(hasse(6, std::nullopt, 5), Error);
  for (const auto& e : hasse(5)) CHECK(dimension(e.upper) - dimension(e.lower) == 1);
}

TEST_CASE("dot output ranks by dimension") {
  const auto dot = to_dot(3, std::nullopt, hasse(3));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("orbit_dim") != std::string::npos);
  CHECK(dot.find("move_down") != std::string::npos);
}

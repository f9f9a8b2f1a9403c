#include "orbits/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "orbits/error.hpp"

namespace orbits {

int poset_max_n() {
  if (const char* env = std::getenv("ORBIT_POSET_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 10;
}

const EnumeratedSet& enumerated(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<EnumeratedSet>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto set = std::make_unique<EnumeratedSet>();
    set->n = n;
    set->elems = enumerate_involutions(n);
    set->ranks = kernels::PackedRanks(n, set->elems);
    slot = std::move(set);
  }
  return *slot;
}

static void check_guard(int n, std::optional<int> max_n) {
  const int limit = max_n.value_or(poset_max_n());
  if (n > limit) {
    throw Error(ErrorKind::TooLarge,
                "n=" + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit));
  }
}

IntersectionResult intersect(const Involution& a, const Involution& b, const IntersectOptions& opts) {
  if (a.n() != b.n()) throw Error(ErrorKind::SizeMismatch, "involutions of different n");
  const bool mixed = a.length() != b.length();
  if (mixed && !opts.force) {
    throw Error(ErrorKind::RankMismatch, "lengths " + std::to_string(a.length()) + " and " +
                                             std::to_string(b.length()) + " differ");
  }
  check_guard(a.n(), opts.max_n);

  IntersectionResult res;
  res.meet = meet(rank_matrix(a), rank_matrix(b));
  res.outside_scope = mixed;

  const auto& all = enumerated(a.n());
  const auto bound = all.ranks.pack(res.meet);
  const auto below = kernels::filter_below_omp(all.ranks, bound);
  const auto maxima = kernels::maximal_omp(all.ranks, below);

  for (std::size_t e : maxima) res.components.push_back(all.elems[e]);
  std::sort(res.components.begin(), res.components.end());
  for (const auto& c : res.components) res.component_dims.push_back(dimension(c));

  res.irreducible = res.components.size() == 1;
  const int top = *std::max_element(res.component_dims.begin(), res.component_dims.end());
  res.codim = std::min(dimension(a), dimension(b)) - top;
  res.equidimensional = std::all_of(res.component_dims.begin(), res.component_dims.end(),
                                    [&](int d) { return d == top; });
  return res;
}

std::vector<Involution> closure(const Involution& sigma) {
  std::set<Involution> seen{sigma};
  std::vector<Involution> frontier{sigma};
  while (!frontier.empty()) {
    std::vector<Involution> next;
    for (const auto& x : frontier) {
      for (auto& c : cover(x)) {
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

int codim(const Involution& upper, const Involution& lower) {
  if (upper.n() != lower.n()) throw Error(ErrorKind::SizeMismatch, "involutions of different n");
  if (!leq(lower, upper)) {
    throw Error(ErrorKind::NotComparable, to_string(lower) + " is not below " + to_string(upper));
  }
  return dimension(upper) - dimension(lower);
}

int depth(const Involution& sigma, int k) {
  if (k < 0 || k > sigma.length()) {
    throw Error(ErrorKind::BadRank, "depth to rank " + std::to_string(k) + " from length " +
                                        std::to_string(sigma.length()));
  }
  return dimension(sigma) - dimension(sigma_o(sigma.n(), k));
}

std::vector<PosetEdge> hasse(int n, std::optional<int> k, std::optional<int> max_n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
  check_guard(n, max_n);
  if (k && (*k < 0 || 2 * *k > n)) throw Error(ErrorKind::BadRank, "no involutions of length " + std::to_string(*k));

  std::vector<PosetEdge> edges;
  for_each_involution(n, k, [&](const Involution& upper) {
    auto moves = cover_moves(upper);
    std::sort(moves.begin(), moves.end(),
              [](const MoveOutcome& x, const MoveOutcome& y) { return x.target < y.target; });
    for (auto& m : moves) {
      if (k && m.target.length() != *k) continue;
      edges.push_back({upper, std::move(m.target), m.kind});
    }
  });
  return edges;
}

std::string to_dot(int n, std::optional<int> k, const std::vector<PosetEdge>& edges) {
  std::map<int, std::vector<Involution>> levels;
  for_each_involution(n, k, [&](const Involution& s) { levels[dimension(s)].push_back(s); });

  std::ostringstream out;
  out << "digraph orbits {\n  rankdir=TB;\n  node [shape=box];\n";
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    out << "  { rank=same;";
    for (const auto& s : it->second) out << " \"" << to_string(s) << "\";";
    out << " }\n";
    for (const auto& s : it->second) {
      out << "  \"" << to_string(s) << "\" [label=\"" << to_string(s) << "\\ndim " << it->first
          << "\", orbit_dim=" << it->first << "];\n";
    }
  }
  for (const auto& e : edges) {
    out << "  \"" << to_string(e.upper) << "\" -> \"" << to_string(e.lower) << "\" [label=\""
        << to_string(e.kind) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace orbits

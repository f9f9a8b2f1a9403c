#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbits/involution.hpp"
#include "orbits/kernels.hpp"
#include "orbits/moves.hpp"
#include "orbits/rank_matrix.hpp"

namespace orbits {

/// Largest n for which whole-poset scans run without --force-style opt in.
/// Reads ORBIT_POSET_MAX_N, defaulting to 10.
int poset_max_n();

/// S_n^2 enumerated once and shared read-only: the involutions in
/// lexicographic order together with their packed rank matrices.
struct EnumeratedSet {
  int n = 0;
  std::vector<Involution> elems;
  kernels::PackedRanks ranks;
};

/// Cached, thread-safe access to the enumeration of S_n^2.
const EnumeratedSet& enumerated(int n);

struct IntersectionResult {
  RankMatrix meet;
  bool irreducible = false;
  /// Maximal orbits of the intersection, sorted.
  std::vector<Involution> components;
  std::vector<int> component_dims;
  /// Smaller input dimension minus the largest component dimension.
  int codim = 0;
  bool equidimensional = true;
  /// Set when the inputs have different lengths and force was requested.
  bool outside_scope = false;
};

struct IntersectOptions {
  bool force = false;
  std::optional<int> max_n;
};

/// Components of the closure intersection: the maximal sigma'' whose rank
/// matrix sits below the entrywise meet.
/// Throws Error{SizeMismatch}, Error{RankMismatch} (lengths differ and not
/// forced), Error{TooLarge}.
IntersectionResult intersect(const Involution& a, const Involution& b, const IntersectOptions& opts = {});

/// Every sigma' <= sigma of any length, found by walking covers downward.
std::vector<Involution> closure(const Involution& sigma);

/// dim(upper) - dim(lower). Throws Error{NotComparable} unless lower <= upper.
int codim(const Involution& upper, const Involution& lower);

/// Distance from sigma down to sigma_o(n, k). Throws Error{BadRank} when
/// L(sigma) < k.
int depth(const Involution& sigma, int k);

struct PosetEdge {
  Involution upper;
  Involution lower;
  MoveKind kind;
};

/// Cover relation of S_n^2 (or of the length-k layer), sorted by upper then
/// lower. Throws Error{TooLarge} above max_n (default poset_max_n()).
std::vector<PosetEdge> hasse(int n, std::optional<int> k = std::nullopt, std::optional<int> max_n = std::nullopt);

/// Graphviz rendering with one rank per dimension.
std::string to_dot(int n, std::optional<int> k, const std::vector<PosetEdge>& edges);

}  // namespace orbits

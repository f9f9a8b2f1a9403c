#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "orbits/involution.hpp"

namespace orbits {

/// Provenance of a minimal elementary transformation.
///
/// The "down" kinds (move_down, move_right, cross_down, swap_down) and
/// delete produce an involution strictly below the source in the closure
/// order; the four "up" kinds produce one strictly above.
enum class MoveKind {
  MoveDown,   // first entry i_s replaced by the nearest fixed point below it
  MoveUp,     // first entry i_s replaced by the nearest fixed point above it
  MoveRight,  // second entry j_s replaced by the nearest fixed point above it
  MoveLeft,   // second entry j_s replaced by the nearest fixed point below it
  CrossDown,  // j_s and i_t exchanged, j_s < i_t
  CrossUp,    // i_t and j_s exchanged, i_s < i_t < j_s < j_t
  SwapDown,   // i_s and i_t exchanged, nested pairs become crossing
  SwapUp,     // i_s and i_t exchanged, crossing pairs become nested
  Delete,     // one pair removed (only in covers)
};

std::string_view to_string(MoveKind kind);
bool is_downward(MoveKind kind);

struct MoveOutcome {
  MoveKind kind;
  /// Pairs of the source involution acted on (one or two).
  std::vector<Pair> source_pairs;
  Involution target;
};

// Single-pair moves. s is the 0-based index of the pair in canonical order;
// each throws Error{IndexOutOfRange} for a bad index and returns nullopt
// when the minimal transformation does not exist.
std::optional<Involution> move_down(const Involution& sigma, std::size_t s);
std::optional<Involution> move_up(const Involution& sigma, std::size_t s);
std::optional<Involution> move_right(const Involution& sigma, std::size_t s);
std::optional<Involution> move_left(const Involution& sigma, std::size_t s);

// Two-pair moves anchored at pair t (cross) or s (swap); results are sorted.
std::vector<Involution> cross_down(const Involution& sigma, std::size_t t);
std::vector<Involution> cross_up(const Involution& sigma, std::size_t t);
std::vector<Involution> swap_down(const Involution& sigma, std::size_t s);
std::vector<Involution> swap_up(const Involution& sigma, std::size_t s);

/// Checks the three side conditions every minimal cross_down move between
/// pairs s (left) and t (right) must satisfy: outer pairs starting before
/// i_s avoid the gap (j_s, i_t); pairs starting strictly between i_s and i_t
/// start before j_s or end before j_t; and every integer of the gap belongs
/// to a pair nested strictly inside (i_s, j_t).
bool cross_down_side_conditions(const Involution& sigma, std::size_t s, std::size_t t);

/// Every minimal downward transformation with its provenance, in
/// deterministic order (by kind, then anchoring pair).
std::vector<MoveOutcome> descendant_moves(const Involution& sigma);
/// Every minimal upward transformation with its provenance.
std::vector<MoveOutcome> ancestor_moves(const Involution& sigma);

/// Same-length covers below sigma (the codimension-one orbits of its
/// closure). Sorted, deduplicated.
std::vector<Involution> descendants(const Involution& sigma);
/// Same-length elements covering sigma. Sorted, deduplicated.
std::vector<Involution> ancestors(const Involution& sigma);

/// The full cover of sigma, descendants plus the maximal single-pair
/// deletions, with provenance.
std::vector<MoveOutcome> cover_moves(const Involution& sigma);
/// Targets of cover_moves, sorted.
std::vector<Involution> cover(const Involution& sigma);

}  // namespace orbits

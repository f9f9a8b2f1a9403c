#include "orbits/moves.hpp"

#include <algorithm>

#include "orbits/error.hpp"
#include "orbits/rank_matrix.hpp"

namespace orbits {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::MoveDown: return "move_down";
    case MoveKind::MoveUp: return "move_up";
    case MoveKind::MoveRight: return "move_right";
    case MoveKind::MoveLeft: return "move_left";
    case MoveKind::CrossDown: return "cross_down";
    case MoveKind::CrossUp: return "cross_up";
    case MoveKind::SwapDown: return "swap_down";
    case MoveKind::SwapUp: return "swap_up";
    case MoveKind::Delete: return "delete";
  }
  return "unknown";
}

bool is_downward(MoveKind kind) {
  switch (kind) {
    case MoveKind::MoveDown:
    case MoveKind::MoveRight:
    case MoveKind::CrossDown:
    case MoveKind::SwapDown:
    case MoveKind::Delete:
      return true;
    default:
      return false;
  }
}

namespace {

const Pair& checked_pair(const Involution& sigma, std::size_t s) {
  if (s >= sigma.pairs().size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "pair index " + std::to_string(s) + " with length " + std::to_string(sigma.length()));
  }
  return sigma.pair(s);
}

bool is_fixed(const Involution& sigma, int x) { return !sigma.in_support(x); }

void sort_unique(std::vector<Involution>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::optional<Involution> move_down(const Involution& sigma, std::size_t s) {
  const Pair p = checked_pair(sigma, s);
  int x = 0;
  for (int c = p.i - 1; c >= 1; --c) {
    if (is_fixed(sigma, c)) {
      x = c;
      break;
    }
  }
  if (x == 0) return std::nullopt;
  if (x != p.i - 1) {
    for (const auto& q : sigma.pairs()) {
      if (x < q.i && q.i < p.i && q.j > p.j) return std::nullopt;
    }
  }
  return replace_entry(sigma, p.i, x);
}

std::optional<Involution> move_up(const Involution& sigma, std::size_t s) {
  const Pair p = checked_pair(sigma, s);
  int x = 0;
  for (int c = p.i + 1; c < p.j; ++c) {
    if (is_fixed(sigma, c)) {
      x = c;
      break;
    }
  }
  if (x == 0) return std::nullopt;
  if (x != p.i + 1) {
    for (const auto& q : sigma.pairs()) {
      if (p.i < q.i && q.i < x && q.j > p.j) return std::nullopt;
    }
  }
  return replace_entry(sigma, p.i, x);
}

std::optional<Involution> move_right(const Involution& sigma, std::size_t s) {
  const Pair p = checked_pair(sigma, s);
  int y = 0;
  for (int c = p.j + 1; c <= sigma.n(); ++c) {
    if (is_fixed(sigma, c)) {
      y = c;
      break;
    }
  }
  if (y == 0) return std::nullopt;
  if (y != p.j + 1) {
    for (const auto& q : sigma.pairs()) {
      if (p.j < q.j && q.j < y && q.i < p.i) return std::nullopt;
    }
  }
  return replace_entry(sigma, p.j, y);
}

std::optional<Involution> move_left(const Involution& sigma, std::size_t s) {
  const Pair p = checked_pair(sigma, s);
  int y = 0;
  for (int c = p.j - 1; c > p.i; --c) {
    if (is_fixed(sigma, c)) {
      y = c;
      break;
    }
  }
  if (y == 0) return std::nullopt;
  if (y != p.j - 1) {
    for (const auto& q : sigma.pairs()) {
      if (y < q.j && q.j < p.j && q.i < p.i) return std::nullopt;
    }
  }
  return replace_entry(sigma, p.j, y);
}

namespace {

// Pairs s of sigma (by index) for which exchanging j_s with i_t is a
// minimal downward transformation.
std::vector<std::size_t> cross_down_partners(const Involution& sigma, std::size_t t) {
  const Pair pt = checked_pair(sigma, t);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sigma.pairs().size(); ++s) {
    const Pair ps = sigma.pair(s);
    if (ps.j >= pt.i) continue;
    bool ok = true;
    for (int q = ps.j + 1; q < pt.i && ok; ++q) {
      if (is_fixed(sigma, q)) ok = false;
    }
    if (ok && ps.j != pt.i - 1) {
      // Every integer strictly between j_s and i_t belongs to a pair lying
      // inside the window [i_s, j_t].
      for (int q = ps.j + 1; q < pt.i && ok; ++q) {
        const Pair owner = sigma.pair(*sigma.pair_index_of(q));
        if (owner.i < ps.i || owner.j > pt.j) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> swap_down_partners(const Involution& sigma, std::size_t s) {
  const Pair ps = checked_pair(sigma, s);
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < sigma.pairs().size(); ++t) {
    const Pair pt = sigma.pair(t);
    if (pt.i <= ps.i || pt.j >= ps.j) continue;
    bool ok = true;
    for (const auto& q : sigma.pairs()) {
      if (ps.i < q.i && q.i < pt.i && !(q.j < pt.j || q.j > ps.j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<std::size_t> swap_up_partners(const Involution& sigma, std::size_t s) {
  const Pair ps = checked_pair(sigma, s);
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < sigma.pairs().size(); ++t) {
    const Pair pt = sigma.pair(t);
    if (!(ps.i < pt.i && pt.i < ps.j && ps.j < pt.j)) continue;
    bool ok = true;
    for (const auto& q : sigma.pairs()) {
      if (ps.i < q.i && q.i < pt.i && !(q.j < ps.j || q.j > pt.j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

// Pairs s with i_s < i_t < j_s < j_t such that exchanging i_t and j_s is
// the inverse of a minimal cross_down on the result.
std::vector<std::size_t> cross_up_partners(const Involution& sigma, std::size_t t) {
  const Pair pt = checked_pair(sigma, t);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sigma.pairs().size(); ++s) {
    const Pair ps = sigma.pair(s);
    if (!(ps.i < pt.i && pt.i < ps.j && ps.j < pt.j)) continue;
    const Involution candidate = exchange_entries(sigma, pt.i, ps.j);
    // The moved pair (j_s, j_t) is the one the inverse cross_down anchors on.
    const auto anchor = candidate.pair_index_of(ps.j);
    for (std::size_t back : cross_down_partners(candidate, *anchor)) {
      if (candidate.pair(back) == Pair{ps.i, pt.i}) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool cross_down_side_conditions(const Involution& sigma, std::size_t s, std::size_t t) {
  const Pair ps = checked_pair(sigma, s);
  const Pair pt = checked_pair(sigma, t);
  for (const auto& p : sigma.pairs()) {
    if (p.i < ps.i && !(p.j < ps.j || p.j > pt.i)) return false;
    if (ps.i < p.i && p.i < pt.i && !(p.i < ps.j || p.j < pt.j)) return false;
  }
  if (pt.i != ps.j + 1) {
    for (int x = ps.j + 1; x < pt.i; ++x) {
      const auto owner = sigma.pair_index_of(x);
      if (!owner) return false;
      const Pair q = sigma.pair(*owner);
      if (!(ps.i < q.i && q.j < pt.j)) return false;
    }
  }
  return true;
}

std::vector<Involution> cross_down(const Involution& sigma, std::size_t t) {
  std::vector<Involution> out;
  const int it = checked_pair(sigma, t).i;
  for (std::size_t s : cross_down_partners(sigma, t)) out.push_back(exchange_entries(sigma, sigma.pair(s).j, it));
  sort_unique(out);
  return out;
}

std::vector<Involution> cross_up(const Involution& sigma, std::size_t t) {
  std::vector<Involution> out;
  const int it = checked_pair(sigma, t).i;
  for (std::size_t s : cross_up_partners(sigma, t)) out.push_back(exchange_entries(sigma, it, sigma.pair(s).j));
  sort_unique(out);
  return out;
}

std::vector<Involution> swap_down(const Involution& sigma, std::size_t s) {
  std::vector<Involution> out;
  const int is = checked_pair(sigma, s).i;
  for (std::size_t t : swap_down_partners(sigma, s)) out.push_back(exchange_entries(sigma, is, sigma.pair(t).i));
  sort_unique(out);
  return out;
}

std::vector<Involution> swap_up(const Involution& sigma, std::size_t s) {
  std::vector<Involution> out;
  const int is = checked_pair(sigma, s).i;
  for (std::size_t t : swap_up_partners(sigma, s)) out.push_back(exchange_entries(sigma, is, sigma.pair(t).i));
  sort_unique(out);
  return out;
}

std::vector<MoveOutcome> descendant_moves(const Involution& sigma) {
  std::vector<MoveOutcome> out;
  const auto& ps = sigma.pairs();
  for (std::size_t s = 0; s < ps.size(); ++s) {
    if (auto r = move_down(sigma, s)) out.push_back({MoveKind::MoveDown, {ps[s]}, *r});
  }
  for (std::size_t s = 0; s < ps.size(); ++s) {
    if (auto r = move_right(sigma, s)) out.push_back({MoveKind::MoveRight, {ps[s]}, *r});
  }
  for (std::size_t t = 0; t < ps.size(); ++t) {
    for (std::size_t s : cross_down_partners(sigma, t)) {
      out.push_back({MoveKind::CrossDown, {ps[s], ps[t]}, exchange_entries(sigma, ps[s].j, ps[t].i)});
    }
  }
  for (std::size_t s = 0; s < ps.size(); ++s) {
    for (std::size_t t : swap_down_partners(sigma, s)) {
      out.push_back({MoveKind::SwapDown, {ps[s], ps[t]}, exchange_entries(sigma, ps[s].i, ps[t].i)});
    }
  }
  return out;
}

std::vector<MoveOutcome> ancestor_moves(const Involution& sigma) {
  std::vector<MoveOutcome> out;
  const auto& ps = sigma.pairs();
  for (std::size_t s = 0; s < ps.size(); ++s) {
    if (auto r = move_up(sigma, s)) out.push_back({MoveKind::MoveUp, {ps[s]}, *r});
  }
  for (std::size_t s = 0; s < ps.size(); ++s) {
    if (auto r = move_left(sigma, s)) out.push_back({MoveKind::MoveLeft, {ps[s]}, *r});
  }
  for (std::size_t t = 0; t < ps.size(); ++t) {
    for (std::size_t s : cross_up_partners(sigma, t)) {
      out.push_back({MoveKind::CrossUp, {ps[s], ps[t]}, exchange_entries(sigma, ps[t].i, ps[s].j)});
    }
  }
  for (std::size_t s = 0; s < ps.size(); ++s) {
    for (std::size_t t : swap_up_partners(sigma, s)) {
      out.push_back({MoveKind::SwapUp, {ps[s], ps[t]}, exchange_entries(sigma, ps[s].i, ps[t].i)});
    }
  }
  return out;
}

namespace {
std::vector<Involution> targets(const std::vector<MoveOutcome>& moves) {
  std::vector<Involution> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.push_back(m.target);
  sort_unique(out);
  return out;
}
}  // namespace

std::vector<Involution> descendants(const Involution& sigma) { return targets(descendant_moves(sigma)); }

std::vector<Involution> ancestors(const Involution& sigma) { return targets(ancestor_moves(sigma)); }

std::vector<MoveOutcome> cover_moves(const Involution& sigma) {
  std::vector<MoveOutcome> candidates = descendant_moves(sigma);
  for (std::size_t s = 0; s < sigma.pairs().size(); ++s) {
    candidates.push_back({MoveKind::Delete, {sigma.pair(s)}, delete_pair(sigma, s)});
  }
  std::vector<RankMatrix> ranks;
  ranks.reserve(candidates.size());
  for (const auto& c : candidates) ranks.push_back(rank_matrix(c.target));

  std::vector<MoveOutcome> out;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
      if (candidates[a].target != candidates[b].target && leq(ranks[a], ranks[b])) dominated = true;
    }
    const bool duplicate = std::any_of(out.begin(), out.end(),
                                       [&](const MoveOutcome& m) { return m.target == candidates[a].target; });
    if (!dominated && !duplicate) out.push_back(candidates[a]);
  }
  return out;
}

std::vector<Involution> cover(const Involution& sigma) { return targets(cover_moves(sigma)); }

}  // namespace orbits

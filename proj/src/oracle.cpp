#include "orbits/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "orbits/error.hpp"
#include "orbits/kernels.hpp"
#include "orbits/moves.hpp"
#include "orbits/poset.hpp"
#include "orbits/rank_matrix.hpp"
#include "orbits/rs.hpp"
#include "orbits/tableau.hpp"

namespace orbits {

namespace {

constexpr std::size_t kKeptFailures = 25;

struct Ledger {
  long long checks = 0;
  long long fails = 0;
  std::vector<Failure> kept;
  std::vector<std::string> notes;

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) {
      ++fails;
      if (kept.size() < kKeptFailures) kept.push_back(describe());
    }
    return ok;
  }

  void merge(Ledger&& other) {
    checks += other.checks;
    fails += other.fails;
    for (auto& f : other.kept)
      if (kept.size() < kKeptFailures) kept.push_back(std::move(f));
    for (auto& n : other.notes) notes.push_back(std::move(n));
  }
};

// Runs body(x, ledger) for x in [0, count) across threads and merges the
// per-item ledgers in index order, so reports do not depend on scheduling.
template <class Body>
Ledger parallel_over(std::size_t count, Body&& body) {
  std::vector<Ledger> parts(count);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 2)
  for (std::int64_t x = 0; x < total; ++x) {
    auto& part = parts[static_cast<std::size_t>(x)];
    try {
      body(static_cast<std::size_t>(x), part);
    } catch (const std::exception& e) {
      part.expect(false, [&] { return Failure{"no exception", "item " + std::to_string(x), "", e.what()}; });
    }
  }
  Ledger all;
  for (auto& p : parts) all.merge(std::move(p));
  return all;
}

std::string fmt(const std::vector<Involution>& v) {
  std::string out = "{";
  for (std::size_t x = 0; x < v.size(); ++x) out += (x ? ", " : "") + to_string(v[x]);
  return out + "}";
}

std::string fmt(const std::vector<TwoColumnTableau>& v) {
  std::string out = "{";
  for (std::size_t x = 0; x < v.size(); ++x) out += (x ? ", " : "") + to_string(v[x]);
  return out + "}";
}

std::string fmt_pair(const Involution& a, const Involution& b) { return to_string(a) + " ; " + to_string(b); }

std::string at_n(const Involution& s) { return to_string(s) + " (n=" + std::to_string(s.n()) + ")"; }

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long long factorial(int m) {
  long long f = 1;
  for (int x = 2; x <= m; ++x) f *= x;
  return f;
}

// Hook-length count of standard tableaux of a partition.
long long hook_count(const std::vector<int>& rows) {
  int n = std::accumulate(rows.begin(), rows.end(), 0);
  long long denom = 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < rows.size(); ++r2)
        if (rows[r2] > c) ++below;
      denom *= (rows[r] - c - 1) + below + 1;
    }
  }
  return factorial(n) / denom;
}

// All-pairs view of S_n^2: the order table plus, on demand, the cover
// relation computed by scanning for intermediate elements.
struct Universe {
  int n = 0;
  const EnumeratedSet* set = nullptr;
  kernels::LeqTable leq;
  std::map<Involution, std::size_t> index;
  std::vector<std::vector<std::size_t>> covers;

  const std::vector<Involution>& elems() const { return set->elems; }
  std::size_t size() const { return set->elems.size(); }
  bool le(std::size_t a, std::size_t b) const { return leq(a, b); }
  bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  std::vector<Involution> to_invs(const std::vector<std::size_t>& ids) const {
    std::vector<Involution> out;
    for (auto x : ids) out.push_back(elems()[x]);
    return sorted(std::move(out));
  }

  // Covers of a among elements of its own length.
  std::vector<std::size_t> layer_covers(std::size_t a) const {
    const int k = elems()[a].length();
    std::vector<std::size_t> below;
    for (std::size_t b = 0; b < size(); ++b)
      if (elems()[b].length() == k && lt(b, a)) below.push_back(b);
    std::vector<std::size_t> out;
    for (auto b : below) {
      bool between = std::any_of(below.begin(), below.end(), [&](std::size_t c) { return c != b && leq(b, c); });
      if (!between) out.push_back(b);
    }
    return out;
  }
};

Universe make_universe(int n, bool with_covers) {
  Universe u;
  u.n = n;
  u.set = &enumerated(n);
  u.leq = kernels::leq_table_omp(u.set->ranks);
  for (std::size_t x = 0; x < u.size(); ++x) u.index.emplace(u.elems()[x], x);
  if (with_covers) u.covers = kernels::covers_omp(u.leq);
  return u;
}

struct Context {
  int n_max = 0;
  std::optional<int> k_max;
  Ledger ledger;

  bool k_ok(int k) const { return !k_max || k <= *k_max; }
  int k_top(int n) const { return k_max ? std::min(*k_max, n / 2) : n / 2; }
};

// ---------------------------------------------------------------- suites

void suite_enumeration(Context& ctx) {
  static const long long known[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152};
  auto& L = ctx.ledger;
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto all = enumerate_involutions(n);
    const auto count = static_cast<long long>(all.size());
    if (n < 13) {
      L.expect(count == known[n], [&] {
        return Failure{"involution count", "n=" + std::to_string(n), std::to_string(known[n]), std::to_string(count)};
      });
    }
    L.expect(count == involution_count(n), [&] {
      return Failure{"count matches recurrence", "n=" + std::to_string(n), std::to_string(involution_count(n)),
                     std::to_string(count)};
    });
    L.expect(std::is_sorted(all.begin(), all.end()) && std::adjacent_find(all.begin(), all.end()) == all.end(), [&] {
      return Failure{"enumeration strictly increasing", "n=" + std::to_string(n), "sorted, unique", "not"};
    });
    for (const auto& s : all) {
      std::set<int> seen;
      bool ok = true;
      for (std::size_t p = 0; p < s.pairs().size(); ++p) {
        const auto& pr = s.pair(p);
        ok = ok && pr.i < pr.j && pr.i >= 1 && pr.j <= n && seen.insert(pr.i).second && seen.insert(pr.j).second;
        if (p > 0) ok = ok && s.pair(p - 1).i < pr.i;
      }
      L.expect(ok, [&] { return Failure{"canonical form", at_n(s), "canonical", "not"}; });
    }
    for (int k = 0; 2 * k <= n; ++k) {
      if (!ctx.k_ok(k)) continue;
      const long long want = factorial(n) / ((1LL << k) * factorial(k) * factorial(n - 2 * k));
      const auto got = static_cast<long long>(enumerate_involutions(n, k).size());
      L.expect(got == want, [&] {
        return Failure{"length-k count", "n=" + std::to_string(n) + " k=" + std::to_string(k), std::to_string(want),
                       std::to_string(got)};
      });
    }
  }
}

void suite_dimension(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto& all = enumerated(n).elems;
    ctx.ledger.merge(parallel_over(all.size(), [&](std::size_t x, Ledger& L) {
      const auto& s = all[x];
      if (!ctx.k_ok(s.length())) return;
      const auto q = q_values(s);
      L.expect(q.empty() || q[0] == 0, [&] { return Failure{"q_1 = 0", at_n(s), "0", std::to_string(q[0])}; });
      // q recounted directly from the definition.
      for (std::size_t t = 0; t < s.pairs().size(); ++t) {
        int want = 0;
        for (const auto& p : s.pairs()) {
          if (p.i < s.pair(t).i && p.j < s.pair(t).j) ++want;
          if (p.j < s.pair(t).i) ++want;
        }
        L.expect(q[t] == want, [&] { return Failure{"q statistic", at_n(s), std::to_string(want), std::to_string(q[t])}; });
      }
      const int d = dimension(s);
      L.expect(d >= 0 && d <= max_dimension(n, s.length()), [&] {
        return Failure{"0 <= dim <= k(n-k)", at_n(s), "<= " + std::to_string(max_dimension(n, s.length())), std::to_string(d)};
      });
      const auto r = rank_matrix(s);
      L.expect(r.at(1, n) == s.length(), [&] {
        return Failure{"R(1,n) = L", at_n(s), std::to_string(s.length()), std::to_string(r.at(1, n))};
      });
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const int w = project(s, i, j).window.length();
          L.expect(r.at(i, j) == w, [&] {
            return Failure{"R(i,j) = L(window)", at_n(s) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                           std::to_string(w), std::to_string(r.at(i, j))};
          });
        }
      for (std::size_t p = 0; p < s.pairs().size(); ++p) {
        const auto pr = s.pair(p);
        const auto rm = rank_matrix(delete_pair(s, p));
        bool ok = true;
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const int delta = (i <= pr.i && j >= pr.j) ? 1 : 0;
            ok = ok && r.at(i, j) == rm.at(i, j) + delta;
          }
        L.expect(ok, [&] {
          return Failure{"deleting a pair lowers exactly the entries around it", at_n(s) + " pair " + std::to_string(p),
                         "unit drop on i<=i_s, j>=j_s", "other delta"};
        });
      }
    }));
  }
}

void suite_extremal(Context& ctx) {
  auto& L = ctx.ledger;
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto& all = enumerated(n).elems;
    for (int k = 0; 2 * k <= n; ++k) {
      if (!ctx.k_ok(k)) continue;
      const auto low = sigma_o(n, k);
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      L.expect(dimension(low) == k * (k + 1) / 2, [&] {
        return Failure{"dim sigma_o = k(k+1)/2", tag, std::to_string(k * (k + 1) / 2), std::to_string(dimension(low))};
      });
      L.expect(descendants(low).empty(), [&] { return Failure{"sigma_o has no descendants", tag, "{}", fmt(descendants(low))}; });
      long long top = 0;
      for (const auto& s : all) {
        if (s.length() < k) continue;
        L.expect(leq(low, s), [&] { return Failure{"sigma_o below every longer involution", fmt_pair(low, s), "true", "false"}; });
        if (s.length() == k && dimension(s) == max_dimension(n, k)) ++top;
      }
      const long long hooks = hook_count({n - k, k});
      L.expect(top == hooks, [&] {
        return Failure{"maximal-dimension count = hook count", tag, std::to_string(hooks), std::to_string(top)};
      });
    }
  }
}

void suite_roundtrip(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto& all = enumerated(n).elems;
    ctx.ledger.merge(parallel_over(all.size(), [&](std::size_t x, Ledger& L) {
      const auto& s = all[x];
      if (!ctx.k_ok(s.length())) return;
      const auto r = rank_matrix(s);
      L.expect(is_valid(r), [&] { return Failure{"rank matrices are valid", at_n(s), "valid", "invalid"}; });
      const auto back = from_rank_matrix(r);
      L.expect(back == s, [&] { return Failure{"recover from rank matrix", at_n(s), to_string(s), to_string(back)}; });
      const auto parsed = parse_involution(to_string(s), n);
      L.expect(parsed == s, [&] { return Failure{"text roundtrip", at_n(s), to_string(s), to_string(parsed)}; });
    }));
  }
}

void suite_validity(Context& ctx) {
  auto& L = ctx.ledger;
  for (int n = 1; n <= ctx.n_max; ++n) {
    std::set<std::vector<std::vector<int>>> expected;
    for (const auto& s : enumerated(n).elems) expected.insert(rank_matrix(s).rows());

    // Every matrix with zero diagonal and lower part whose entries grow by 0
    // or 1 along rows (left to right) and columns (bottom to top).
    std::vector<std::pair<int, int>> cells;
    for (int i = n - 1; i >= 1; --i)
      for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
    RankMatrix m(n);
    std::set<std::vector<std::vector<int>>> accepted;
    long long candidates = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (c == cells.size()) {
        ++candidates;
        if (is_valid(m)) accepted.insert(m.rows());
        return;
      }
      const auto [i, j] = cells[c];
      const int left = m.at(i, j - 1);
      const int down = m.at(i + 1, j);
      for (int v = std::max(left, down); v <= std::min(left, down) + 1; ++v) {
        m.set(i, j, v);
        rec(c + 1);
      }
      m.set(i, j, 0);
    };
    rec(0);
    L.expect(accepted == expected, [&] {
      return Failure{"valid candidates are exactly the rank matrices", "n=" + std::to_string(n),
                     std::to_string(expected.size()) + " matrices", std::to_string(accepted.size()) + " accepted"};
    });
    L.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(candidates) + " monotone candidates, " +
                      std::to_string(accepted.size()) + " valid");
  }
}

void suite_order(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, false);
    const auto N = u.size();
    ctx.ledger.merge(parallel_over(N, [&](std::size_t a, Ledger& L) {
      const auto& sa = u.elems()[a];
      L.expect(u.le(a, a), [&] { return Failure{"reflexive", at_n(sa), "true", "false"}; });
      const auto ra = rank_matrix(sa);
      for (std::size_t b = 0; b < N; ++b) {
        const auto& sb = u.elems()[b];
        const bool direct = leq(sa, sb);
        L.expect(direct == u.le(a, b), [&] { return Failure{"packed order agrees", fmt_pair(sa, sb), std::to_string(direct), "differs"}; });
        if (a != b) {
          L.expect(!(u.le(a, b) && u.le(b, a)), [&] { return Failure{"antisymmetric", fmt_pair(sa, sb), "not both", "both"}; });
        }
        const auto mt = meet(ra, rank_matrix(sb));
        bool lower = true;
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) lower = lower && mt.at(i, j) == std::min(ra.at(i, j), rank_matrix(sb).at(i, j));
        L.expect(lower, [&] { return Failure{"meet is the entrywise minimum", fmt_pair(sa, sb), "min", "other"}; });
        if (!u.le(a, b)) continue;
        for (std::size_t c = 0; c < N; ++c) {
          if (u.le(b, c)) {
            L.expect(u.le(a, c), [&] {
              return Failure{"transitive", fmt_pair(sa, sb) + " ; " + to_string(u.elems()[c]), "true", "false"};
            });
          }
        }
      }
    }));
  }
}

void suite_triangle(Context& ctx) {
  const int kcap = std::min(2, ctx.k_max.value_or(2));
  for (int n = 1; n <= ctx.n_max; ++n) {
    std::vector<Involution> pool;
    for (const auto& s : enumerated(n).elems)
      if (s.length() <= kcap) pool.push_back(s);

    // Number of points of sigma inside the triangle with right-angle vertex
    // (x, y): pairs (a, b) with x <= a and b <= y.
    auto card_in = [](const Involution& s, int x, int y) {
      int c = 0;
      for (const auto& p : s.pairs())
        if (p.i >= x && p.j <= y) ++c;
      return c;
    };
    auto criterion = [&](const Involution& lower, const Involution& upper) {
      const auto& lp = lower.pairs();
      const auto& up = upper.pairs();
      for (unsigned mask = 1; mask < (1u << lp.size()); ++mask) {
        int x = n + 1, y = 0;
        for (std::size_t p = 0; p < lp.size(); ++p)
          if (mask >> p & 1u) x = std::min(x, lp[p].i), y = std::max(y, lp[p].j);
        const int need = card_in(lower, x, y);
        bool found = need == 0;
        for (unsigned m2 = 1; m2 < (1u << up.size()) && !found; ++m2) {
          int x2 = n + 1, y2 = 0;
          for (std::size_t p = 0; p < up.size(); ++p)
            if (m2 >> p & 1u) x2 = std::min(x2, up[p].i), y2 = std::max(y2, up[p].j);
          if (x2 >= x && y2 <= y && card_in(upper, x2, y2) >= need) found = true;
        }
        if (!found) return false;
      }
      return true;
    };
    ctx.ledger.merge(parallel_over(pool.size(), [&](std::size_t x, Ledger& L) {
      for (const auto& upper : pool) {
        const auto& lower = pool[x];
        const bool want = criterion(lower, upper);
        const bool got = leq(lower, upper);
        L.expect(want == got, [&] {
          return Failure{"triangle criterion agrees with the order", fmt_pair(lower, upper), std::to_string(want), std::to_string(got)};
        });
      }
    }));
  }
}

std::optional<std::size_t> index_starting_at(const Involution& s, int i) {
  for (std::size_t p = 0; p < s.pairs().size(); ++p)
    if (s.pair(p).i == i) return p;
  return std::nullopt;
}

std::optional<std::size_t> index_of_pair(const Involution& s, Pair pr) {
  for (std::size_t p = 0; p < s.pairs().size(); ++p)
    if (s.pair(p) == pr) return p;
  return std::nullopt;
}

bool contains(const std::vector<Involution>& v, const Involution& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

void suite_moves(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto& all = enumerated(n).elems;
    ctx.ledger.merge(parallel_over(all.size(), [&](std::size_t x, Ledger& L) {
      const auto& s = all[x];
      if (!ctx.k_ok(s.length())) return;
      for (std::size_t p = 0; p < s.pairs().size(); ++p) {
        const auto pr = s.pair(p);
        if (auto d = move_down(s, p)) {
          int y = pr.i - 1;
          while (y >= 1 && s.in_support(y)) --y;
          auto t = index_of_pair(*d, {y, pr.j});
          const auto back = t ? move_up(*d, *t) : std::nullopt;
          L.expect(back && *back == s, [&] {
            return Failure{"move_up undoes move_down", at_n(s) + " pair " + std::to_string(p), to_string(s),
                           back ? to_string(*back) : "absent"};
          });
        }
        if (auto u = move_up(s, p)) {
          int y = pr.i + 1;
          while (y < pr.j && s.in_support(y)) ++y;
          auto t = index_of_pair(*u, {y, pr.j});
          const auto back = t ? move_down(*u, *t) : std::nullopt;
          L.expect(back && *back == s, [&] {
            return Failure{"move_down undoes move_up", at_n(s) + " pair " + std::to_string(p), to_string(s),
                           back ? to_string(*back) : "absent"};
          });
        }
        if (auto r = move_right(s, p)) {
          int y = pr.j + 1;
          while (y <= n && s.in_support(y)) ++y;
          auto t = index_of_pair(*r, {pr.i, y});
          const auto back = t ? move_left(*r, *t) : std::nullopt;
          L.expect(back && *back == s, [&] {
            return Failure{"move_left undoes move_right", at_n(s) + " pair " + std::to_string(p), to_string(s),
                           back ? to_string(*back) : "absent"};
          });
        }
        if (auto l = move_left(s, p)) {
          int y = pr.j - 1;
          while (y > pr.i && s.in_support(y)) --y;
          auto t = index_of_pair(*l, {pr.i, y});
          const auto back = t ? move_right(*l, *t) : std::nullopt;
          L.expect(back && *back == s, [&] {
            return Failure{"move_right undoes move_left", at_n(s) + " pair " + std::to_string(p), to_string(s),
                           back ? to_string(*back) : "absent"};
          });
        }
      }

      const auto down = descendant_moves(s);
      const auto up = ancestor_moves(s);
      for (const auto& m : down) {
        L.expect(less(m.target, s), [&] {
          return Failure{std::string(to_string(m.kind)) + " goes down", at_n(s), "below", to_string(m.target)};
        });
        if (m.kind == MoveKind::CrossDown) {
          const auto ps = *index_of_pair(s, m.source_pairs[0]);
          const auto pt = *index_of_pair(s, m.source_pairs[1]);
          L.expect(cross_down_side_conditions(s, ps, pt), [&] {
            return Failure{"cross_down side conditions", at_n(s), "hold", "violated by " + to_string(m.target)};
          });
          // The pair now starting at j_s anchors the inverse move.
          const auto anchor = index_starting_at(m.target, m.source_pairs[0].j);
          const auto inv = anchor ? cross_up(m.target, *anchor) : std::vector<Involution>{};
          L.expect(contains(inv, s), [&] {
            return Failure{"cross_up undoes cross_down", at_n(s) + " -> " + to_string(m.target), to_string(s), fmt(inv)};
          });
        }
        if (m.kind == MoveKind::SwapDown) {
          const auto anchor = index_starting_at(m.target, m.source_pairs[0].i);
          const auto inv = anchor ? swap_up(m.target, *anchor) : std::vector<Involution>{};
          L.expect(contains(inv, s), [&] {
            return Failure{"swap_up undoes swap_down", at_n(s) + " -> " + to_string(m.target), to_string(s), fmt(inv)};
          });
        }
      }
      for (const auto& m : up) {
        L.expect(less(s, m.target), [&] {
          return Failure{std::string(to_string(m.kind)) + " goes up", at_n(s), "above", to_string(m.target)};
        });
        if (m.kind == MoveKind::CrossUp) {
          // Source pairs (i_s, j_s), (i_t, j_t) with i_t < j_s become
          // (i_s, i_t), (j_s, j_t); cross_down anchored at (j_s, j_t) undoes it.
          const auto anchor = index_starting_at(m.target, m.source_pairs[0].j);
          const auto inv = anchor ? cross_down(m.target, *anchor) : std::vector<Involution>{};
          L.expect(contains(inv, s), [&] {
            return Failure{"cross_down undoes cross_up", at_n(s) + " -> " + to_string(m.target), to_string(s), fmt(inv)};
          });
        }
        if (m.kind == MoveKind::SwapUp) {
          const auto anchor = index_starting_at(m.target, m.source_pairs[0].i);
          const auto inv = anchor ? swap_down(m.target, *anchor) : std::vector<Involution>{};
          L.expect(contains(inv, s), [&] {
            return Failure{"swap_down undoes swap_up", at_n(s) + " -> " + to_string(m.target), to_string(s), fmt(inv)};
          });
        }
      }
    }));
  }
}

// No two minimal moves of the list reach the same involution.
template <class Moves>
void expect_disjoint(Ledger& L, const Involution& s, const Moves& moves, const char* what) {
  std::map<Involution, int> seen;
  for (const auto& m : moves) ++seen[m.target];
  for (const auto& [t, c] : seen) {
    L.expect(c == 1, [&] {
      return Failure{std::string(what) + " families are disjoint", at_n(s), "1 move to " + to_string(t), std::to_string(c)};
    });
  }
}

void suite_descendants(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, false);
    ctx.ledger.merge(parallel_over(u.size(), [&](std::size_t a, Ledger& L) {
      const auto& s = u.elems()[a];
      if (!ctx.k_ok(s.length())) return;
      const auto got = descendants(s);
      const auto by_cover = u.to_invs(u.layer_covers(a));
      std::vector<std::size_t> gap_one;
      for (std::size_t b = 0; b < u.size(); ++b) {
        const auto& sb = u.elems()[b];
        if (sb.length() == s.length() && u.lt(b, a) && dimension(s) - dimension(sb) == 1) gap_one.push_back(b);
      }
      const auto by_dim = u.to_invs(gap_one);
      L.expect(got == by_cover, [&] { return Failure{"descendants = same-length covers", at_n(s), fmt(by_cover), fmt(got)}; });
      L.expect(got == by_dim, [&] { return Failure{"descendants = codimension one below", at_n(s), fmt(by_dim), fmt(got)}; });
      expect_disjoint(L, s, descendant_moves(s), "descendant");
    }));
  }
}

void suite_ancestors(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto& all = enumerated(n).elems;
    std::vector<std::vector<Involution>> down(all.size());
    ctx.ledger.merge(parallel_over(all.size(), [&](std::size_t x, Ledger&) { down[x] = descendants(all[x]); }));
    ctx.ledger.merge(parallel_over(all.size(), [&](std::size_t x, Ledger& L) {
      const auto& s = all[x];
      if (!ctx.k_ok(s.length())) return;
      std::vector<Involution> want;
      for (std::size_t y = 0; y < all.size(); ++y)
        if (contains(down[y], s)) want.push_back(all[y]);
      want = sorted(std::move(want));
      const auto got = ancestors(s);
      L.expect(got == want, [&] { return Failure{"ancestors invert descendants", at_n(s), fmt(want), fmt(got)}; });
      expect_disjoint(L, s, ancestor_moves(s), "ancestor");
    }));
  }
}

void suite_cover(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, true);
    ctx.ledger.merge(parallel_over(u.size(), [&](std::size_t a, Ledger& L) {
      const auto& s = u.elems()[a];
      if (!ctx.k_ok(s.length())) return;
      const auto want = u.to_invs(u.covers[a]);
      const auto got = cover(s);
      L.expect(got == want, [&] { return Failure{"cover = brute-force covers", at_n(s), fmt(want), fmt(got)}; });
      for (const auto& c : got) {
        L.expect(dimension(s) - dimension(c) == 1, [&] {
          return Failure{"covers drop dimension by one", fmt_pair(s, c), "1", std::to_string(dimension(s) - dimension(c))};
        });
      }
    }));
  }
}

void suite_reachability(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, false);
    ctx.ledger.merge(parallel_over(u.size(), [&](std::size_t a, Ledger& L) {
      const auto& s = u.elems()[a];
      if (!ctx.k_ok(s.length())) return;
      std::set<Involution> reached;
      std::vector<Involution> frontier{s};
      while (!frontier.empty()) {
        std::vector<Involution> next;
        for (const auto& x : frontier)
          for (auto& d : descendants(x))
            if (reached.insert(d).second) next.push_back(d);
        frontier = std::move(next);
      }
      std::vector<Involution> want;
      for (std::size_t b = 0; b < u.size(); ++b)
        if (u.elems()[b].length() == s.length() && u.lt(b, a)) want.push_back(u.elems()[b]);
      const std::vector<Involution> got(reached.begin(), reached.end());
      L.expect(got == sorted(want), [&] {
        return Failure{"descendant steps reach everything below of equal length", at_n(s), fmt(sorted(want)), fmt(got)};
      });
    }));
  }
}

void suite_closure(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, false);
    ctx.ledger.merge(parallel_over(u.size(), [&](std::size_t a, Ledger& L) {
      const auto& s = u.elems()[a];
      if (!ctx.k_ok(s.length())) return;
      std::vector<std::size_t> below;
      for (std::size_t b = 0; b < u.size(); ++b)
        if (u.le(b, a)) below.push_back(b);
      const auto want = u.to_invs(below);
      const auto got = closure(s);
      L.expect(got == want, [&] { return Failure{"closure by descent = closure by filter", at_n(s), fmt(want), fmt(got)}; });
    }));
  }
}

// Shortest and longest cover chains from a down to each element, walked on
// the brute-force cover graph. Elements are processed by decreasing size of
// their down-set, which is a linear extension of the order.
struct ChainLengths {
  std::vector<int> shortest, longest;
};

ChainLengths walk_chains(const Universe& u, const std::vector<std::size_t>& order, std::size_t a) {
  ChainLengths c{std::vector<int>(u.size(), -1), std::vector<int>(u.size(), -1)};
  c.shortest[a] = c.longest[a] = 0;
  for (std::size_t v : order) {
    if (c.shortest[v] < 0) continue;
    for (std::size_t w : u.covers[v]) {
      if (c.shortest[w] < 0 || c.shortest[w] > c.shortest[v] + 1) c.shortest[w] = c.shortest[v] + 1;
      if (c.longest[w] < c.longest[v] + 1) c.longest[w] = c.longest[v] + 1;
    }
  }
  return c;
}

std::vector<std::size_t> linear_extension(const Universe& u) {
  std::vector<std::size_t> downset(u.size(), 0);
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b) downset[a] += u.le(b, a) ? 1 : 0;
  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return downset[x] > downset[y]; });
  return order;
}

void suite_chains(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, true);
    const auto order = linear_extension(u);
    ctx.ledger.merge(parallel_over(u.size(), [&](std::size_t a, Ledger& L) {
      const auto& s = u.elems()[a];
      if (!ctx.k_ok(s.length())) return;
      const auto c = walk_chains(u, order, a);
      for (std::size_t b = 0; b < u.size(); ++b) {
        if (!u.lt(b, a)) continue;
        const auto& sb = u.elems()[b];
        const int got = codim(s, sb);
        L.expect(c.shortest[b] == c.longest[b] && c.longest[b] == got, [&] {
          return Failure{"every maximal chain has length codim", fmt_pair(s, sb),
                         "chains of length " + std::to_string(c.shortest[b]) + ".." + std::to_string(c.longest[b]),
                         "codim " + std::to_string(got)};
        });
      }
    }));
  }
}

void suite_depth(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto u = make_universe(n, true);
    const auto order = linear_extension(u);
    ctx.ledger.merge(parallel_over(u.size(), [&](std::size_t a, Ledger& L) {
      const auto& s = u.elems()[a];
      if (!ctx.k_ok(s.length())) return;
      // One explicit walk with the library cover, always taking the first.
      int steps = 0;
      for (Involution cur = s; !cur.is_identity(); ++steps) cur = cover(cur).front();
      L.expect(steps == depth(s, 0) && steps == dimension(s), [&] {
        return Failure{"depth_0 = walked chain length = dim", at_n(s), std::to_string(steps), std::to_string(dimension(s))};
      });
      const auto c = walk_chains(u, order, a);
      for (int k = 0; k <= s.length(); ++k) {
        const auto target = u.index.at(sigma_o(n, k));
        L.expect(c.shortest[target] >= 0 && c.shortest[target] == c.longest[target] && c.longest[target] == depth(s, k), [&] {
          return Failure{"depth_k = chain length down to sigma_o(k)", at_n(s) + " k=" + std::to_string(k),
                         std::to_string(c.shortest[target]), std::to_string(depth(s, k))};
        });
      }
    }));
  }
}

void suite_codim(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto& all = enumerated(n).elems;
    std::vector<std::vector<Involution>> closures(all.size()), down(all.size());
    ctx.ledger.merge(parallel_over(all.size(), [&](std::size_t x, Ledger&) {
      closures[x] = closure(all[x]);
      down[x] = descendants(all[x]);
    }));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a; b < all.size(); ++b)
        if (all[a].length() == all[b].length() && ctx.k_ok(all[a].length())) pairs.emplace_back(a, b);

    struct Tally {
      long long reducible = 0, crit_agree = 0, crit_disagree = 0;
      std::string first_reducible, first_disagree;
    };
    std::vector<Tally> tallies(pairs.size());
    ctx.ledger.merge(parallel_over(pairs.size(), [&](std::size_t x, Ledger& L) {
      const auto [a, b] = pairs[x];
      const auto &sa = all[a], &sb = all[b];
      const auto r = intersect(sa, sb);
      const bool valid = is_valid(r.meet);
      L.expect(r.irreducible == valid, [&] {
        return Failure{"irreducible iff the meet is a rank matrix", fmt_pair(sa, sb), std::to_string(valid), std::to_string(r.irreducible)};
      });
      if (r.irreducible) {
        L.expect(rank_matrix(r.components[0]) == r.meet, [&] {
          return Failure{"single component realizes the meet", fmt_pair(sa, sb), "R = meet", to_string(r.components[0])};
        });
      }
      // Independent route: maximal elements of the intersection of the two
      // closures found by cover descent.
      std::vector<Involution> common;
      std::set_intersection(closures[a].begin(), closures[a].end(), closures[b].begin(), closures[b].end(),
                            std::back_inserter(common));
      std::vector<Involution> tops;
      for (const auto& c : common)
        if (std::none_of(common.begin(), common.end(), [&](const Involution& d) { return less(c, d); })) tops.push_back(c);
      L.expect(tops == r.components, [&] {
        return Failure{"components = maxima of the closure intersection", fmt_pair(sa, sb), fmt(tops), fmt(r.components)};
      });
      auto& t = tallies[x];
      if (!r.irreducible) {
        t.reducible = 1;
        t.first_reducible = fmt_pair(sa, sb) + " -> " + fmt(r.components);
      }
      if (a != b && dimension(sa) == dimension(sb)) {
        std::vector<Involution> both;
        std::set_intersection(down[a].begin(), down[a].end(), down[b].begin(), down[b].end(), std::back_inserter(both));
        const bool crit = !both.empty();
        const bool one = r.codim == 1;
        if (dimension(sa) == max_dimension(n, sa.length())) {
          L.expect(crit == one, [&] {
            return Failure{"maximal orbits: codim 1 iff a shared descendant", fmt_pair(sa, sb), std::to_string(one), std::to_string(crit)};
          });
        } else if (crit == one) {
          t.crit_agree = 1;
        } else {
          t.crit_disagree = 1;
          t.first_disagree = fmt_pair(sa, sb) + " codim " + std::to_string(r.codim) + ", shared descendant " + (crit ? "yes" : "no");
        }
      }
    }));
    Tally sum;
    for (const auto& t : tallies) {
      if (t.reducible && sum.first_reducible.empty()) sum.first_reducible = t.first_reducible;
      if (t.crit_disagree && sum.first_disagree.empty()) sum.first_disagree = t.first_disagree;
      sum.reducible += t.reducible;
      sum.crit_agree += t.crit_agree;
      sum.crit_disagree += t.crit_disagree;
    }
    const std::string tag = "n=" + std::to_string(n) + ": ";
    ctx.ledger.notes.push_back(tag + std::to_string(pairs.size()) + " equal-length pairs, " + std::to_string(sum.reducible) +
                               " reducible intersections" +
                               (sum.first_reducible.empty() ? "" : "; first " + sum.first_reducible));
    if (n == 5 && ctx.k_ok(2)) {
      const auto r = intersect(parse_involution("(1,5)(3,4)", 5), parse_involution("(2,4)(3,5)", 5));
      ctx.ledger.notes.push_back(tag + "(1,5)(3,4) ; (2,4)(3,5) -> " + fmt(r.components) +
                                 (r.irreducible ? " irreducible" : " reducible"));
    }
    if (sum.crit_agree + sum.crit_disagree > 0) {
      ctx.ledger.notes.push_back(tag + "shared-descendant criterion on non-maximal equal-dimension pairs: " +
                                 std::to_string(sum.crit_agree) + " agree, " + std::to_string(sum.crit_disagree) + " disagree" +
                                 (sum.first_disagree.empty() ? "" : "; first disagreement " + sum.first_disagree));
    }
  }
}

void suite_maximal(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 0; k <= ctx.k_top(n); ++k) {
      const auto tabs = enumerate_tableaux(n, k);
      ctx.ledger.merge(parallel_over(tabs.size(), [&](std::size_t x, Ledger& L) {
        const auto top = sigma_T(tabs[x]);
        L.expect(ancestors(top).empty(), [&] { return Failure{"maximal orbits have no ancestors", at_n(top), "{}", fmt(ancestors(top))}; });
        for (const auto& lower : descendants(top)) {
          const auto anc = ancestors(lower);
          const bool two = anc.size() == 2 && contains(anc, top);
          L.expect(two, [&] { return Failure{"exactly two ancestors, one of them sigma_T", at_n(lower), "2 incl. " + to_string(top), fmt(anc)}; });
          if (!two) continue;
          const auto& other = anc[0] == top ? anc[1] : anc[0];
          for (const auto& a : anc) {
            L.expect(dimension(a) == max_dimension(n, k), [&] {
              return Failure{"both ancestors are maximal", at_n(a), std::to_string(max_dimension(n, k)), std::to_string(dimension(a))};
            });
          }
          const auto mt = meet(rank_matrix(top), rank_matrix(other));
          L.expect(is_valid(mt) && mt == rank_matrix(lower), [&] {
            return Failure{"meet of the two ancestors is R of the descendant", fmt_pair(top, other), to_string(lower), "other"};
          });
          const auto r = intersect(top, other);
          L.expect(r.irreducible && r.components.front() == lower && r.codim == 1, [&] {
            return Failure{"intersection is the descendant", fmt_pair(top, other), to_string(lower), fmt(r.components)};
          });
        }
      }));
    }
  }
}

void suite_tableau(Context& ctx) {
  auto& L = ctx.ledger;
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 0; k <= ctx.k_top(n); ++k) {
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const auto tabs = enumerate_tableaux(n, k);
      const long long hooks = hook_count({n - k, k});
      L.expect(static_cast<long long>(tabs.size()) == hooks, [&] {
        return Failure{"tableau count = hook count", tag, std::to_string(hooks), std::to_string(tabs.size())};
      });
      std::vector<Involution> images;
      for (const auto& t : tabs) {
        const auto s = sigma_T(t);
        images.push_back(s);
        L.expect(s.length() == k && dimension(s) == max_dimension(n, k), [&] {
          return Failure{"sigma_T is maximal", to_string(t), std::to_string(max_dimension(n, k)), std::to_string(dimension(s))};
        });
        for (const auto& p : s.pairs())
          L.expect(p.gap() % 2 == 1, [&] { return Failure{"sigma_T gaps are odd", to_string(t), "odd", to_string(s)}; });
        const auto back = tableau_of(s);
        L.expect(back && *back == t, [&] { return Failure{"tableau_of inverts sigma_T", to_string(t), to_string(t), back ? to_string(*back) : "absent"}; });
        const auto parsed = parse_tableau(to_string(t));
        L.expect(parsed == t, [&] { return Failure{"tableau text roundtrip", to_string(t), to_string(t), to_string(parsed)}; });
      }
      std::vector<Involution> tops;
      for (const auto& s : enumerated(n).elems)
        if (s.length() == k && dimension(s) == max_dimension(n, k)) tops.push_back(s);
      L.expect(sorted(images) == sorted(tops), [&] {
        return Failure{"sigma_T hits exactly the maximal involutions", tag, fmt(sorted(tops)), fmt(sorted(images))};
      });
    }
  }
}

// The single swap turning t into s, when there is one: (i, j) with i leaving
// the first column and j leaving the second.
std::optional<std::pair<int, int>> swap_between(const TwoColumnTableau& t, const TwoColumnTableau& s) {
  std::vector<int> out1, out2;
  std::set_difference(t.col1().begin(), t.col1().end(), s.col1().begin(), s.col1().end(), std::back_inserter(out1));
  std::set_difference(t.col2().begin(), t.col2().end(), s.col2().begin(), s.col2().end(), std::back_inserter(out2));
  if (out1.size() != 1 || out2.size() != 1) return std::nullopt;
  return std::pair{out1[0], out2[0]};
}

void suite_partners(Context& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 0; k <= ctx.k_top(n); ++k) {
      const auto tabs = enumerate_tableaux(n, k);
      std::vector<std::vector<TwoColumnTableau>> partners(tabs.size());
      ctx.ledger.merge(parallel_over(tabs.size(), [&](std::size_t x, Ledger&) { partners[x] = codim1_partners(tabs[x]); }));
      ctx.ledger.merge(parallel_over(tabs.size(), [&](std::size_t x, Ledger& L) {
        const auto& t = tabs[x];
        const auto& got = partners[x];
        const auto rules = rule_partners(t);
        L.expect(rules == got, [&] { return Failure{"Change rules give every partner", to_string(t), fmt(got), fmt(rules)}; });
        for (const auto& p : change_candidates_low(t)) {
          const auto arr = change(t, p.i, p.j);
          const auto s = as_tableau(arr);
          L.expect(s && std::binary_search(got.begin(), got.end(), *s), [&] {
            return Failure{"low rule yields a partner", to_string(t) + " swap " + std::to_string(p.i) + "," + std::to_string(p.j),
                           "partner tableau", to_string(arr)};
          });
        }
        for (const auto& h : change_candidates_high(t)) {
          for (int b : h.partners) {
            const auto arr = change(t, h.a, b);
            const auto s = as_tableau(arr);
            L.expect(s && std::binary_search(got.begin(), got.end(), *s), [&] {
              return Failure{"high rule yields a partner", to_string(t) + " swap " + std::to_string(h.a) + "," + std::to_string(b),
                             "partner tableau", to_string(arr)};
            });
          }
        }
        std::vector<TwoColumnTableau> by_intersection;
        for (std::size_t y = 0; y < tabs.size(); ++y) {
          if (y == x) continue;
          if (intersect(sigma_T(t), sigma_T(tabs[y])).codim == 1) by_intersection.push_back(tabs[y]);
        }
        by_intersection = sorted(std::move(by_intersection));
        L.expect(by_intersection == got, [&] {
          return Failure{"partners = codimension-one intersections", to_string(t), fmt(by_intersection), fmt(got)};
        });
        for (const auto& s : got) {
          const auto sw = swap_between(t, s);
          L.expect(sw && std::abs(sw->second - sw->first) % 2 == 1, [&] {
            return Failure{"partners differ by one swap of odd distance", to_string(t) + " ; " + to_string(s), "odd swap",
                           sw ? std::to_string(sw->first) + "<->" + std::to_string(sw->second) : "not a single swap"};
          });
          const auto y = static_cast<std::size_t>(std::find(tabs.begin(), tabs.end(), s) - tabs.begin());
          L.expect(y < tabs.size() && std::binary_search(partners[y].begin(), partners[y].end(), t), [&] {
            return Failure{"partner relation is symmetric", to_string(t) + " ; " + to_string(s), "mutual", "one-sided"};
          });
        }
      }));
    }
  }
}

void suite_rs(Context& ctx) {
  auto& L = ctx.ledger;
  for (int n = 1; n <= ctx.n_max; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    long long narrow = 0;
    do {
      const auto [p, q] = rs_pair(w);
      const auto back = rs_word(p, q);
      L.expect(back == w && p.is_standard() && q.is_standard() && p.shape() == q.shape(), [&] {
        return Failure{"rs_word inverts rs_pair", to_string(w), to_string(w), to_string(back)};
      });
      if (p.rows.size() <= 2 || p.rows.front().size() <= 2) ++narrow;
    } while (std::next_permutation(w.begin(), w.end()));
    L.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(factorial(n)) + " words roundtripped, " +
                      std::to_string(narrow) + " with at most two rows or two columns");

    for (int k = 1; k <= ctx.k_top(n); ++k) {
      const auto tabs = enumerate_tableaux(n, k);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < tabs.size(); ++a)
        for (std::size_t b = 0; b < tabs.size(); ++b)
          if (a != b) pairs.emplace_back(a, b);
      L.merge(parallel_over(pairs.size(), [&](std::size_t x, Ledger& LL) {
        const auto& t = tabs[pairs[x].first];
        const auto& s = tabs[pairs[x].second];
        const auto wit = find_rs_witness(t, s);
        const bool one = intersect(sigma_T(t), sigma_T(s)).codim == 1;
        if (wit) {
          LL.expect(one, [&] {
            return Failure{"a witness forces codimension one", to_string(t) + " ; " + to_string(s), "codim 1",
                           "witness P=" + to_string(wit->p) + " m=" + std::to_string(wit->m)};
          });
        }
        if (k == 2) {
          LL.expect(one == wit.has_value(), [&] {
            return Failure{"shape (n-2,2): codim 1 iff a witness exists", to_string(t) + " ; " + to_string(s),
                           one ? "witness" : "none", wit ? "witness" : "none"};
          });
        }
      }));
    }
  }
}

void suite_rs_nowitness(Context& ctx) {
  bool found = false;
  for (int n = 6; n <= ctx.n_max && !found; ++n) {
    for (int k = 3; k <= ctx.k_top(n) && !found; ++k) {
      const auto tabs = enumerate_tableaux(n, k);
      long long codim_one = 0, missing = 0;
      std::string first;
      for (std::size_t a = 0; a < tabs.size(); ++a) {
        for (const auto& s : codim1_partners(tabs[a])) {
          ++codim_one;
          ctx.ledger.checks++;
          if (!find_rs_witness(tabs[a], s)) {
            if (first.empty()) first = to_string(tabs[a]) + " ; " + to_string(s);
            ++missing;
          }
        }
      }
      ctx.ledger.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(codim_one) +
                                 " ordered codim-1 pairs, " + std::to_string(missing) + " without a witness" +
                                 (first.empty() ? "" : "; smallest " + first));
      found = missing > 0;
    }
  }
  if (!found) ctx.ledger.notes.push_back("no codim-1 pair without a witness up to n=" + std::to_string(ctx.n_max));
}

void suite_conjecture(Context& ctx) {
  for (int n = 2; n <= ctx.n_max; ++n) {
    for (int k = 1; k <= ctx.k_top(n); ++k) {
      const auto tabs = enumerate_tableaux(n, k);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < tabs.size(); ++a)
        for (std::size_t b = a + 1; b < tabs.size(); ++b) pairs.emplace_back(a, b);
      std::vector<int> kind(pairs.size(), 0);  // 0 not codim 1, 1 irreducible, 2 reducible
      ctx.ledger.merge(parallel_over(pairs.size(), [&](std::size_t x, Ledger& L) {
        ++L.checks;
        const auto r = intersect(sigma_T(tabs[pairs[x].first]), sigma_T(tabs[pairs[x].second]));
        if (r.codim == 1) kind[x] = r.irreducible ? 1 : 2;
      }));
      const auto irr = std::count(kind.begin(), kind.end(), 1);
      const auto red = std::count(kind.begin(), kind.end(), 2);
      ctx.ledger.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(irr + red) +
                                 " codim-1 maximal pairs, " + std::to_string(red) + " reducible");
    }
  }
}

struct SuiteDef {
  std::string name;
  int default_n;
  int guard;
  void (*run)(Context&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"enumeration", 8, 12, suite_enumeration},
      {"dimension", 7, 10, suite_dimension},
      {"extremal", 8, 10, suite_extremal},
      {"roundtrip", 7, 10, suite_roundtrip},
      {"validity", 6, 7, suite_validity},
      {"order", 6, 7, suite_order},
      {"triangle", 5, 7, suite_triangle},
      {"moves", 7, 10, suite_moves},
      {"descendants", 7, 8, suite_descendants},
      {"ancestors", 7, 8, suite_ancestors},
      {"cover", 6, 8, suite_cover},
      {"reachability", 6, 8, suite_reachability},
      {"closure", 6, 8, suite_closure},
      {"chains", 6, 8, suite_chains},
      {"depth", 6, 8, suite_depth},
      {"codim", 6, 8, suite_codim},
      {"maximal", 7, 10, suite_maximal},
      {"tableau", 8, 10, suite_tableau},
      {"partners", 7, 10, suite_partners},
      {"rs", 7, 8, suite_rs},
      {"rs-nowitness", 8, 10, suite_rs_nowitness},
      {"conjecture", 8, 10, suite_conjecture},
  };
  return defs;
}

const SuiteDef& find_suite(std::string_view name) {
  for (const auto& d : registry())
    if (d.name == name) return d;
  throw Error(ErrorKind::UnknownSuite, "no suite named '" + std::string(name) + "'");
}

int guard_for(int suite_guard) { return std::getenv("ORBIT_POSET_MAX_N") ? poset_max_n() : suite_guard; }

}  // namespace

std::map<Involution, std::vector<Involution>> brute_covers(int n) {
  const int limit = guard_for(8);
  if (n > limit) throw Error(ErrorKind::TooLarge, "brute-force covers are limited to n <= " + std::to_string(limit));
  const auto u = make_universe(n, true);
  std::map<Involution, std::vector<Involution>> out;
  for (std::size_t a = 0; a < u.size(); ++a) out.emplace(u.elems()[a], u.to_invs(u.covers[a]));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.name);
    return v;
  }();
  return names;
}

int default_suite_n(std::string_view name) { return find_suite(name).default_n; }

VerificationReport verify_suite(std::string_view name, std::optional<int> n_max, std::optional<int> k_max) {
  const auto& def = find_suite(name);
  Context ctx;
  ctx.n_max = n_max.value_or(def.default_n);
  ctx.k_max = k_max;
  const int limit = guard_for(def.guard);
  if (ctx.n_max > limit) {
    throw Error(ErrorKind::TooLarge, "suite " + def.name + " is limited to n <= " + std::to_string(limit));
  }
  if (ctx.n_max < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");

  const auto start = std::chrono::steady_clock::now();
  def.run(ctx);
  const auto stop = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.suite = def.name;
  rep.n_max = ctx.n_max;
  rep.k_max = k_max;
  rep.checks_run = ctx.ledger.checks;
  rep.failure_count = ctx.ledger.fails;
  rep.failures = std::move(ctx.ledger.kept);
  rep.notes = std::move(ctx.ledger.notes);
  rep.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return rep;
}

}  // namespace orbits

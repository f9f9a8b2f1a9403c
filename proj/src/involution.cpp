#include "orbits/involution.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "orbits/error.hpp"

namespace orbits {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadWindow: return "BadWindow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidRankMatrix: return "InvalidRankMatrix";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotInColumn: return "NotInColumn";
    case ErrorKind::NotATableau: return "NotATableau";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Involution::Involution(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "ambient rank n must be >= 1");
}

Involution::Involution(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {}

int Involution::image(int x) const {
  for (const auto& p : pairs_) {
    if (p.i == x) return p.j;
    if (p.j == x) return p.i;
  }
  return x;
}

std::optional<std::size_t> Involution::pair_index_of(int x) const {
  for (std::size_t s = 0; s < pairs_.size(); ++s) {
    if (pairs_[s].i == x || pairs_[s].j == x) return s;
  }
  return std::nullopt;
}

std::strong_ordering operator<=>(const Involution& a, const Involution& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.pairs_ <=> b.pairs_;
}

bool UpperMatrix01::at(int row, int col) const {
  return std::find(ones.begin(), ones.end(), Pair{row, col}) != ones.end();
}

Involution canonicalize(std::vector<std::pair<int, int>> raw, int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "ambient rank n must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Pair> pairs;
  pairs.reserve(raw.size());
  for (auto [a, b] : raw) {
    for (int x : {a, b}) {
      if (x < 1 || x > n) {
        throw Error(ErrorKind::OutOfRange,
                    "entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
      }
      if (seen[x]) throw Error(ErrorKind::DuplicateEntry, "entry " + std::to_string(x) + " repeated");
      seen[x] = true;
    }
    pairs.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(pairs.begin(), pairs.end());
  return Involution(n, std::move(pairs));
}

std::vector<int> q_values(const Involution& sigma) {
  const auto& ps = sigma.pairs();
  std::vector<int> q(ps.size(), 0);
  for (std::size_t s = 0; s < ps.size(); ++s) {
    for (const auto& p : ps) {
      if (p.i < ps[s].i && p.j < ps[s].j) ++q[s];
      if (p.j < ps[s].i) ++q[s];
    }
  }
  assert(q.empty() || q.front() == 0);
  return q;
}

int dimension(const Involution& sigma) {
  int dim = sigma.length() * sigma.n();
  for (const auto& p : sigma.pairs()) dim -= p.gap();
  for (int q : q_values(sigma)) dim -= q;
  return dim;
}

UpperMatrix01 strict_upper_matrix(const Involution& sigma) {
  return UpperMatrix01{sigma.n(), sigma.pairs()};
}

std::vector<int> support(const Involution& sigma) {
  std::vector<int> out;
  for (const auto& p : sigma.pairs()) {
    out.push_back(p.i);
    out.push_back(p.j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> support_complement(const Involution& sigma) {
  std::vector<int> out;
  for (int x = 1; x <= sigma.n(); ++x) {
    if (!sigma.in_support(x)) out.push_back(x);
  }
  return out;
}

Projection project(const Involution& sigma, int from, int to) {
  if (from >= to || from < 1 || to > sigma.n()) {
    throw Error(ErrorKind::BadWindow,
                "window [" + std::to_string(from) + "," + std::to_string(to) + "] in n=" +
                    std::to_string(sigma.n()));
  }
  Projection out{from, to, {}, Involution(to - from + 1)};
  std::vector<std::pair<int, int>> shifted;
  for (const auto& p : sigma.pairs()) {
    if (from <= p.i && p.j <= to) {
      out.kept.push_back(p);
      shifted.emplace_back(p.i - from + 1, p.j - from + 1);
    }
  }
  out.window = canonicalize(std::move(shifted), to - from + 1);
  return out;
}

Involution delete_pair(const Involution& sigma, std::size_t s) {
  if (s >= sigma.pairs().size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "pair index " + std::to_string(s) + " with length " + std::to_string(sigma.length()));
  }
  std::vector<std::pair<int, int>> rest;
  for (std::size_t t = 0; t < sigma.pairs().size(); ++t) {
    if (t != s) rest.emplace_back(sigma.pair(t).i, sigma.pair(t).j);
  }
  return canonicalize(std::move(rest), sigma.n());
}

Involution sigma_o(int n, int k) {
  if (k < 0 || 2 * k > n) {
    throw Error(ErrorKind::BadRank, "k=" + std::to_string(k) + " outside 0..n/2 for n=" + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int s = 1; s <= k; ++s) pairs.emplace_back(s, n - k + s);
  return canonicalize(std::move(pairs), n);
}

namespace {

void enumerate_from(int n, std::optional<int> k, std::vector<bool>& used,
                    std::vector<std::pair<int, int>>& current, int last_first,
                    const std::function<void(const Involution&)>& visit) {
  const int len = static_cast<int>(current.size());
  if (!k || *k == len) visit(canonicalize(current, n));
  if (k && len >= *k) return;
  for (int i = last_first + 1; i <= n; ++i) {
    if (used[i]) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (used[j]) continue;
      used[i] = used[j] = true;
      current.emplace_back(i, j);
      enumerate_from(n, k, used, current, i, visit);
      current.pop_back();
      used[i] = used[j] = false;
    }
  }
}

}  // namespace

void for_each_involution(int n, std::optional<int> k,
                         const std::function<void(const Involution&)>& visit) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "ambient rank n must be >= 1");
  if (k && (*k < 0 || 2 * *k > n)) return;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::pair<int, int>> current;
  enumerate_from(n, k, used, current, 0, visit);
}

std::vector<Involution> enumerate_involutions(int n, std::optional<int> k) {
  std::vector<Involution> out;
  for_each_involution(n, k, [&](const Involution& s) { out.push_back(s); });
  return out;
}

long long involution_count(int n) {
  long long prev = 1, cur = 1;  // a(0), a(1)
  if (n <= 1) return 1;
  for (int m = 2; m <= n; ++m) {
    long long next = cur + (m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string to_string(const Involution& sigma) {
  if (sigma.is_identity()) return "id";
  std::string out;
  for (const auto& p : sigma.pairs()) {
    out += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  }
  return out;
}

Involution parse_involution(std::string_view text, int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s == "id" || s == "Id" || s == "()") return Involution(n);

  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  auto read_int = [&](char terminator) {
    std::size_t end = s.find(terminator, pos);
    if (end == std::string::npos || end == pos) {
      throw Error(ErrorKind::Parse, "malformed involution '" + std::string(text) + "'");
    }
    int value = 0;
    for (std::size_t c = pos; c < end; ++c) {
      if (!std::isdigit(static_cast<unsigned char>(s[c]))) {
        throw Error(ErrorKind::Parse, "unexpected character in '" + std::string(text) + "'");
      }
      value = value * 10 + (s[c] - '0');
      if (value > 1'000'000) throw Error(ErrorKind::Parse, "entry too large");
    }
    pos = end + 1;
    return value;
  };
  while (pos < s.size()) {
    if (s[pos] != '(') throw Error(ErrorKind::Parse, "expected '(' in '" + std::string(text) + "'");
    ++pos;
    int a = read_int(',');
    int b = read_int(')');
    if (a == b) throw Error(ErrorKind::DuplicateEntry, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    pairs.emplace_back(a, b);
  }
  return canonicalize(std::move(pairs), n);
}

Involution replace_entry(const Involution& sigma, int p, int q) {
  if (!sigma.in_support(p) || sigma.in_support(q) || q < 1 || q > sigma.n()) {
    throw Error(ErrorKind::OutOfRange, "type I transformation needs p in support, q a fixed point");
  }
  std::vector<std::pair<int, int>> raw;
  for (const auto& pr : sigma.pairs()) {
    raw.emplace_back(pr.i == p ? q : pr.i, pr.j == p ? q : pr.j);
  }
  return canonicalize(std::move(raw), sigma.n());
}

Involution exchange_entries(const Involution& sigma, int p, int q) {
  auto sp = sigma.pair_index_of(p);
  auto sq = sigma.pair_index_of(q);
  if (!sp || !sq || *sp == *sq) {
    throw Error(ErrorKind::OutOfRange, "type II transformation needs entries of two different pairs");
  }
  auto swap = [&](int x) { return x == p ? q : (x == q ? p : x); };
  std::vector<std::pair<int, int>> raw;
  for (const auto& pr : sigma.pairs()) raw.emplace_back(swap(pr.i), swap(pr.j));
  return canonicalize(std::move(raw), sigma.n());
}

}  // namespace orbits

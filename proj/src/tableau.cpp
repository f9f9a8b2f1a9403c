#include "orbits/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <numeric>

#include "orbits/error.hpp"
#include "orbits/moves.hpp"

namespace orbits {

namespace {

bool columns_partition(const ColumnPairArray& arr) {
  const int n = arr.n();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto* col : {&arr.col1, &arr.col2}) {
    for (std::size_t r = 0; r < col->size(); ++r) {
      const int v = (*col)[r];
      if (v < 1 || v > n || seen[v]) return false;
      if (r > 0 && (*col)[r - 1] >= v) return false;
      seen[v] = 1;
    }
  }
  return true;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(v[x]);
  }
  return out;
}

std::vector<int> parse_column(std::string_view text) {
  std::vector<int> out;
  std::string digits;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) digits += c;
  if (digits.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = digits.find(',', pos);
    const std::string_view tok = std::string_view(digits).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::Parse, "bad column entry '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

TwoColumnTableau::TwoColumnTableau(int n) : col1_(static_cast<std::size_t>(n)) {
  std::iota(col1_.begin(), col1_.end(), 1);
}

TwoColumnTableau::TwoColumnTableau(std::vector<int> col1, std::vector<int> col2)
    : col1_(std::move(col1)), col2_(std::move(col2)) {
  if (!is_tableau(columns())) {
    throw Error(ErrorKind::NotATableau, to_string(columns()) + " is not a two-column standard tableau");
  }
}

bool is_tableau(const ColumnPairArray& arr) {
  if (arr.col1.size() < arr.col2.size() || !columns_partition(arr)) return false;
  for (std::size_t r = 0; r < arr.col2.size(); ++r)
    if (arr.col1[r] >= arr.col2[r]) return false;
  return true;
}

std::optional<TwoColumnTableau> as_tableau(const ColumnPairArray& arr) {
  if (!is_tableau(arr)) return std::nullopt;
  return TwoColumnTableau(arr.col1, arr.col2);
}

std::vector<Pair> sigma_T_by_b(const TwoColumnTableau& t) {
  std::vector<char> used(static_cast<std::size_t>(t.n()) + 1, 0);
  std::vector<Pair> out;
  for (int b : t.col2()) {
    int best = 0;
    for (int d : t.col1()) {
      if (d >= b) break;
      if (!used[d]) best = d;
    }
    assert(best > 0);
    used[best] = 1;
    out.push_back({best, b});
  }
  return out;
}

Involution sigma_T(const TwoColumnTableau& t) {
  std::vector<std::pair<int, int>> raw;
  for (const auto& p : sigma_T_by_b(t)) {
    assert(p.gap() % 2 == 1);
    raw.emplace_back(p.i, p.j);
  }
  return canonicalize(std::move(raw), t.n());
}

std::optional<TwoColumnTableau> tableau_of(const Involution& sigma) {
  const int n = sigma.n();
  const int k = sigma.length();
  if (dimension(sigma) != max_dimension(n, k)) return std::nullopt;
  ColumnPairArray arr;
  for (const auto& p : sigma.pairs()) arr.col2.push_back(p.j);
  std::sort(arr.col2.begin(), arr.col2.end());
  for (int x = 1; x <= n; ++x)
    if (!std::binary_search(arr.col2.begin(), arr.col2.end(), x)) arr.col1.push_back(x);
  auto t = as_tableau(arr);
  if (!t || sigma_T(*t) != sigma) return std::nullopt;
  return t;
}

int row_of(const TwoColumnTableau& t, int i) {
  for (const auto* col : {&t.col1(), &t.col2()}) {
    const auto it = std::find(col->begin(), col->end(), i);
    if (it != col->end()) return static_cast<int>(it - col->begin()) + 1;
  }
  throw Error(ErrorKind::OutOfRange, std::to_string(i) + " is not an entry of the tableau");
}

ColumnPairArray change(const TwoColumnTableau& t, int i, int j) {
  auto arr = t.columns();
  auto it = std::find(arr.col1.begin(), arr.col1.end(), i);
  auto jt = std::find(arr.col2.begin(), arr.col2.end(), j);
  if (it == arr.col1.end()) throw Error(ErrorKind::NotInColumn, std::to_string(i) + " is not in the first column");
  if (jt == arr.col2.end()) throw Error(ErrorKind::NotInColumn, std::to_string(j) + " is not in the second column");
  *it = j;
  *jt = i;
  std::sort(arr.col1.begin(), arr.col1.end());
  std::sort(arr.col2.begin(), arr.col2.end());
  return arr;
}

std::vector<TwoColumnTableau> enumerate_tableaux(int n, int k) {
  if (k < 0 || 2 * k > n) throw Error(ErrorKind::BadRank, "no tableau of shape (" + std::to_string(n - k) + "," + std::to_string(k) + ")");
  std::vector<TwoColumnTableau> out;
  std::vector<int> col2;
  // Ballot condition: after reading 1..x, at most as many entries in the
  // second column as in the first.
  auto rec = [&](auto&& self, int x) -> void {
    if (static_cast<int>(col2.size()) == k) {
      std::vector<int> col1;
      for (int v = 1; v <= n; ++v)
        if (!std::binary_search(col2.begin(), col2.end(), v)) col1.push_back(v);
      out.emplace_back(std::move(col1), col2);
      return;
    }
    for (int v = x; v <= n; ++v) {
      const int firsts = v - 1 - static_cast<int>(col2.size());
      if (firsts <= static_cast<int>(col2.size())) continue;
      if (n - v < k - static_cast<int>(col2.size()) - 1) break;
      col2.push_back(v);
      self(self, v + 1);
      col2.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<TwoColumnTableau> codim1_partners(const TwoColumnTableau& t) {
  const Involution top = sigma_T(t);
  std::set<TwoColumnTableau> out;
  for (const auto& lower : descendants(top)) {
    for (const auto& other : ancestors(lower)) {
      if (other == top) continue;
      if (auto s = tableau_of(other)) out.insert(*s);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Pair> change_candidates_low(const TwoColumnTableau& t) {
  const auto pairs = sigma_T_by_b(t);
  std::vector<Pair> out;
  for (std::size_t s = 0; s < pairs.size(); ++s)
    if (pairs[s].j > 2 * static_cast<int>(s + 1)) out.push_back(pairs[s]);
  return out;
}

std::vector<HighCandidate> change_candidates_high(const TwoColumnTableau& t) {
  const auto pairs = sigma_T_by_b(t);
  const auto& col2 = t.col2();
  std::vector<HighCandidate> out;
  for (int a : t.col1()) {
    if (!std::binary_search(col2.begin(), col2.end(), a - 1)) continue;
    HighCandidate cand{a, {}};
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const int b = pairs[p].j;
      if (b >= a) break;
      if (b == a - 1) {
        cand.partners.push_back(b);
        continue;
      }
      // Pairs after p up to the one ending at a - 1.
      std::vector<int> later;
      for (std::size_t q = p + 1; q < pairs.size() && pairs[q].j <= a - 1; ++q) {
        later.push_back(pairs[q].i);
        later.push_back(pairs[q].j);
      }
      std::sort(later.begin(), later.end());
      std::vector<int> gap(static_cast<std::size_t>(a - 1 - b));
      std::iota(gap.begin(), gap.end(), b + 1);
      if (later == gap) cand.partners.push_back(b);
    }
    if (!cand.partners.empty()) out.push_back(std::move(cand));
  }
  return out;
}

std::vector<TwoColumnTableau> rule_partners(const TwoColumnTableau& t) {
  std::set<TwoColumnTableau> out;
  for (const auto& p : change_candidates_low(t))
    if (auto s = as_tableau(change(t, p.i, p.j))) out.insert(*s);
  for (const auto& h : change_candidates_high(t))
    for (int b : h.partners)
      if (auto s = as_tableau(change(t, h.a, b))) out.insert(*s);
  return {out.begin(), out.end()};
}

std::string to_string(const ColumnPairArray& arr) { return join(arr.col1) + "|" + join(arr.col2); }

std::string to_string(const TwoColumnTableau& t) { return to_string(t.columns()); }

TwoColumnTableau parse_tableau(std::string_view text) {
  const auto bar = text.find('|');
  if (bar != std::string_view::npos && text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorKind::Parse, "a two-column tableau has exactly one '|'");
  }
  auto col1 = parse_column(text.substr(0, bar));
  auto col2 = bar == std::string_view::npos ? std::vector<int>{} : parse_column(text.substr(bar + 1));
  if (col1.empty()) throw Error(ErrorKind::Parse, "empty first column");
  return TwoColumnTableau(std::move(col1), std::move(col2));
}

}  // namespace orbits

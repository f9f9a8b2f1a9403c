#include "orbits/rs.hpp"

#include <algorithm>

#include "orbits/error.hpp"

namespace orbits {

int StandardTableau::size() const {
  int total = 0;
  for (const auto& r : rows) total += static_cast<int>(r.size());
  return total;
}

std::vector<int> StandardTableau::shape() const {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
  return out;
}

bool StandardTableau::is_standard() const {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

StandardTableau to_standard(const TwoColumnTableau& t) {
  StandardTableau out{{t.col1()}};
  if (!t.col2().empty()) out.rows.push_back(t.col2());
  return out;
}

std::pair<StandardTableau, StandardTableau> rs_pair(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n || seen[v]) throw Error(ErrorKind::NotAPermutation, "word " + to_string(word) + " is not a permutation");
    seen[v] = 1;
  }
  StandardTableau p, q;
  for (int step = 0; step < n; ++step) {
    int x = word[step];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({step + 1});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q.rows[r].push_back(step + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {p, q};
}

std::vector<int> rs_word(const StandardTableau& p, const StandardTableau& q) {
  if (p.shape() != q.shape()) throw Error(ErrorKind::ShapeMismatch, "insertion and recording tableaux differ in shape");
  if (!p.is_standard() || !q.is_standard()) throw Error(ErrorKind::ShapeMismatch, "not a pair of standard tableaux");
  const int n = p.size();
  auto rows = p.rows;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int step = n; step >= 1; --step) {
    // The cell holding step in q is the last one created; undo its bump path.
    std::size_t r = 0;
    while (std::find(q.rows[r].begin(), q.rows[r].end(), step) == q.rows[r].end()) ++r;
    int x = rows[r].back();
    rows[r].pop_back();
    while (r-- > 0) {
      auto& row = rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    word[static_cast<std::size_t>(step - 1)] = x;
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }
  return word;
}

std::vector<int> apply_adjacent(std::vector<int> word, int m) {
  for (int& v : word) {
    if (v == m) v = m + 1;
    else if (v == m + 1) v = m;
  }
  return word;
}

std::optional<RsWitness> find_rs_witness(const TwoColumnTableau& t, const TwoColumnTableau& s) {
  if (t.n() != s.n() || t.k() != s.k()) throw Error(ErrorKind::ShapeMismatch, "tableaux of different shapes");
  const auto st = to_standard(t);
  const auto ss = to_standard(s);
  for (const auto& p : enumerate_tableaux(t.n(), t.k())) {
    const auto sp = to_standard(p);
    const auto wt = rs_word(st, sp);
    const auto ws = rs_word(ss, sp);
    for (int m = 1; m < t.n(); ++m)
      if (wt == apply_adjacent(ws, m)) return RsWitness{p, m};
  }
  return std::nullopt;
}

std::string to_string(const StandardTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(t.rows[r][c]);
    }
  }
  return out;
}

std::string to_string(const std::vector<int>& word) {
  std::string out = "[";
  for (std::size_t x = 0; x < word.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(word[x]);
  }
  return out + "]";
}

}  // namespace orbits

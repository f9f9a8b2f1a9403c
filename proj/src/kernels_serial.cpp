#include "orbits/error.hpp"
#include "orbits/kernels.hpp"

namespace orbits::kernels {

PackedRanks::PackedRanks(int n, std::span<const Involution> elems)
    : n_(n), count_(elems.size()), width_(static_cast<std::size_t>(n) * (n - 1) / 2) {
  cells_.reserve(count_ * width_);
  for (const auto& e : elems) {
    if (e.n() != n) throw Error(ErrorKind::SizeMismatch, "mixed ambient ranks in packed set");
    auto row = pack(rank_matrix(e));
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

PackedRanks::PackedRanks(int n, std::span<const RankMatrix> mats)
    : n_(n), count_(mats.size()), width_(static_cast<std::size_t>(n) * (n - 1) / 2) {
  cells_.reserve(count_ * width_);
  for (const auto& m : mats) {
    auto row = pack(m);
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

std::vector<std::uint8_t> PackedRanks::pack(const RankMatrix& r) const {
  if (r.n() != n_) throw Error(ErrorKind::SizeMismatch, "matrix size differs from packed set");
  std::vector<std::uint8_t> out;
  out.reserve(width_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.push_back(static_cast<std::uint8_t>(r.at(i, j)));
  return out;
}

LeqTable leq_table_serial(const PackedRanks& ranks) {
  const std::size_t n = ranks.size();
  LeqTable t{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.bits[a * n + b] = packed_leq(ranks.row(a), ranks.row(b)) ? 1 : 0;
  return t;
}

std::vector<std::vector<std::size_t>> covers_serial(const LeqTable& leq) {
  const std::size_t n = leq.count;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(b, a)) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) {
        if (c != a && c != b && leq(b, c) && leq(c, a)) between = true;
      }
      if (!between) out[a].push_back(b);
    }
  }
  return out;
}

std::vector<std::size_t> filter_below_serial(const PackedRanks& ranks, std::span<const std::uint8_t> bound) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < ranks.size(); ++e)
    if (packed_leq(ranks.row(e), bound)) out.push_back(e);
  return out;
}

std::vector<std::size_t> maximal_serial(const PackedRanks& ranks, std::span<const std::size_t> subset) {
  std::vector<std::size_t> out;
  for (std::size_t a : subset) {
    bool dominated = false;
    for (std::size_t b : subset) {
      if (a != b && packed_leq(ranks.row(a), ranks.row(b))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

}  // namespace orbits::kernels

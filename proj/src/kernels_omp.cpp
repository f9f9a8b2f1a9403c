#include <cstdint>

#include "orbits/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbits::kernels {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

LeqTable leq_table_omp(const PackedRanks& ranks) {
  const auto n = static_cast<std::int64_t>(ranks.size());
  LeqTable t{ranks.size(), std::vector<std::uint8_t>(ranks.size() * ranks.size(), 0)};
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < n; ++a) {
    const auto ra = ranks.row(static_cast<std::size_t>(a));
    for (std::int64_t b = 0; b < n; ++b) {
      t.bits[a * n + b] = packed_leq(ra, ranks.row(static_cast<std::size_t>(b))) ? 1 : 0;
    }
  }
  return t;
}

std::vector<std::vector<std::size_t>> covers_omp(const LeqTable& leq) {
  const auto n = static_cast<std::int64_t>(leq.count);
  std::vector<std::vector<std::size_t>> out(leq.count);
  // Rows are independent; each thread owns whole rows of the output.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t a = 0; a < n; ++a) {
    std::vector<std::size_t> below;
    for (std::int64_t b = 0; b < n; ++b)
      if (a != b && leq(b, a)) below.push_back(static_cast<std::size_t>(b));
    for (std::size_t b : below) {
      bool between = false;
      for (std::size_t c : below) {
        if (c != b && leq(b, c)) {
          between = true;
          break;
        }
      }
      if (!between) out[a].push_back(b);
    }
  }
  return out;
}

std::vector<std::size_t> filter_below_omp(const PackedRanks& ranks, std::span<const std::uint8_t> bound) {
  const auto n = static_cast<std::int64_t>(ranks.size());
  std::vector<std::uint8_t> keep(ranks.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < n; ++e) keep[e] = packed_leq(ranks.row(static_cast<std::size_t>(e)), bound) ? 1 : 0;
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < keep.size(); ++e)
    if (keep[e]) out.push_back(e);
  return out;
}

std::vector<std::size_t> maximal_omp(const PackedRanks& ranks, std::span<const std::size_t> subset) {
  const auto m = static_cast<std::int64_t>(subset.size());
  std::vector<std::uint8_t> keep(subset.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t x = 0; x < m; ++x) {
    const std::size_t a = subset[x];
    bool dominated = false;
    for (std::size_t b : subset) {
      if (a != b && packed_leq(ranks.row(a), ranks.row(b))) {
        dominated = true;
        break;
      }
    }
    keep[x] = dominated ? 0 : 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < subset.size(); ++x)
    if (keep[x]) out.push_back(subset[x]);
  return out;
}

}  // namespace orbits::kernels

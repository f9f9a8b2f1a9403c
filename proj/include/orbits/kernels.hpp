#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orbits/involution.hpp"
#include "orbits/rank_matrix.hpp"

// Data-parallel scans over a set of involutions. Every kernel comes in two
// flavours with identical results: a plain serial loop kept as the
// reference, and an OpenMP version used by the library. Outputs are always
// in index order, so the two can be compared element for element.
namespace orbits::kernels {

/// Upper triangles of many rank matrices of the same n, packed row-major
/// into one contiguous byte buffer.
class PackedRanks {
 public:
  PackedRanks() = default;
  PackedRanks(int n, std::span<const Involution> elems);
  PackedRanks(int n, std::span<const RankMatrix> mats);

  int n() const { return n_; }
  std::size_t size() const { return count_; }
  std::size_t width() const { return width_; }
  std::span<const std::uint8_t> row(std::size_t e) const {
    return {cells_.data() + e * width_, width_};
  }
  /// Packs a single matrix with the same layout.
  std::vector<std::uint8_t> pack(const RankMatrix& r) const;

 private:
  int n_ = 0;
  std::size_t count_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint8_t> cells_;
};

inline bool packed_leq(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] > b[c]) return false;
  return true;
}

/// Dense N x N relation table, entry (a, b) set iff element a <= element b.
struct LeqTable {
  std::size_t count = 0;
  std::vector<std::uint8_t> bits;
  bool operator()(std::size_t a, std::size_t b) const { return bits[a * count + b] != 0; }
  friend bool operator==(const LeqTable&, const LeqTable&) = default;
};

LeqTable leq_table_serial(const PackedRanks& ranks);
LeqTable leq_table_omp(const PackedRanks& ranks);

/// For each element a, indices b with b < a and nothing strictly between
/// (the cover relation of the whole set), ascending.
std::vector<std::vector<std::size_t>> covers_serial(const LeqTable& leq);
std::vector<std::vector<std::size_t>> covers_omp(const LeqTable& leq);

/// Indices e with R_e <= bound entrywise, ascending.
std::vector<std::size_t> filter_below_serial(const PackedRanks& ranks, std::span<const std::uint8_t> bound);
std::vector<std::size_t> filter_below_omp(const PackedRanks& ranks, std::span<const std::uint8_t> bound);

/// Maximal elements (under the packed order) among the given indices.
std::vector<std::size_t> maximal_serial(const PackedRanks& ranks, std::span<const std::size_t> subset);
std::vector<std::size_t> maximal_omp(const PackedRanks& ranks, std::span<const std::size_t> subset);

/// Number of worker threads OpenMP would use (1 when built without it).
int thread_count();

}  // namespace orbits::kernels

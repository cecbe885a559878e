#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ssdiv {

/// Per-axis extents |G|_1..|G|_k of a k-dimensional region grid, x first.
struct GridDims {
  std::vector<std::int64_t> dims;

  std::size_t rank() const noexcept { return dims.size(); }
  std::int64_t volume() const;
  void validate() const;
};

/// Canonical (row-major, x fastest) index: sum_d p_d * prod_{q<d} |G|_q.
std::int64_t canonical_index(std::span<const std::int64_t> p, const GridDims& dims);

/// Inverse of canonical_index.
std::vector<std::int64_t> canonical_inverse(std::int64_t s, const GridDims& dims);

/// Slots needed to hold the children of `active_regions` regions split
/// r_1 x ... x r_k ways.
std::int64_t olt_size_k(std::int64_t active_regions, std::span<const std::int64_t> r);

}  // namespace ssdiv

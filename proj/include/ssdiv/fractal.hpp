#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssdiv/region.hpp"

namespace ssdiv {

struct Viewport {
  double re_min = -1.5;
  double re_max = 0.5;
  double im_min = -1.0;
  double im_max = 1.0;

  void validate() const;
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

/// The case-study window, corners -1.5-1i and 0.5+1i.
inline constexpr Viewport kStudyViewport{-1.5, 0.5, -1.0, 1.0};
inline constexpr int kStudyDwell = 512;

using Dwell = std::int32_t;

/// n x n escape-time dwells, row-major, row 0 at im_min.
class DwellGrid {
 public:
  DwellGrid() = default;
  DwellGrid(std::int64_t n, Viewport vp, Dwell d_max, Dwell init = 1);

  std::int64_t n() const noexcept { return n_; }
  Dwell d_max() const noexcept { return d_max_; }
  const Viewport& viewport() const noexcept { return vp_; }

  Dwell& at(std::int64_t row, std::int64_t col) noexcept { return cells_[index(row, col)]; }
  Dwell at(std::int64_t row, std::int64_t col) const noexcept { return cells_[index(row, col)]; }

  std::span<Dwell> cells() noexcept { return cells_; }
  std::span<const Dwell> cells() const noexcept { return cells_; }

  friend bool operator==(const DwellGrid& a, const DwellGrid& b) {
    return a.n_ == b.n_ && a.d_max_ == b.d_max_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t index(std::int64_t row, std::int64_t col) const noexcept {
    return static_cast<std::size_t>(row * n_ + col);
  }

  std::int64_t n_ = 0;
  Dwell d_max_ = 1;
  Viewport vp_{};
  std::vector<Dwell> cells_;
};

/// Geometry needed to evaluate dwells without a grid.
struct GridGeometry {
  std::int64_t n = 0;
  Viewport vp{};
  Dwell d_max = kStudyDwell;
};

/// Pixel-center sampling: re = re_min + (col + 0.5) * width / n, same for im.
std::complex<double> pixel_to_complex(std::int64_t row, std::int64_t col, std::int64_t n,
                                      const Viewport& vp);

/// First i >= 1 with |z_i| > 2 under z <- z^2 + c, z_0 = 0; d_max if none.
Dwell dwell(std::complex<double> c, Dwell d_max) noexcept;

inline Dwell pixel_dwell(const GridGeometry& geom, std::int64_t row, std::int64_t col) {
  return dwell(pixel_to_complex(row, col, geom.n, geom.vp), geom.d_max);
}

/// Shared dwell of the region's border pixels, or nullopt if they differ.
/// Stops at the first disagreeing pixel; `evaluated` (if given) receives the
/// number of dwell evaluations performed.
std::optional<Dwell> perimeter_common_dwell(const GridGeometry& geom, const RegionOffset& region,
                                            std::int64_t* evaluated = nullptr);

void fill_region(DwellGrid& grid, const RegionOffset& region, Dwell value);

/// Per-pixel dwell over `region`, written into `grid`.
void compute_region(DwellGrid& grid, const RegionOffset& region);

/// Flat parallel render of every pixel; rows are split across `workers`.
DwellGrid exhaustive_render(std::int64_t n, const Viewport& vp, Dwell d_max, int workers = 0);

/// Number of cells that differ between two grids of equal size.
std::int64_t count_mismatches(const DwellGrid& a, const DwellGrid& b);

/// Parts-per-million disagreement between two grids of equal size.
double mismatch_ppm(const DwellGrid& a, const DwellGrid& b);

}  // namespace ssdiv

#pragma once

#include <cstdint>

namespace ssdiv {

/// Square pixel-space region; `x` is the column, `y` the row of the top-left
/// pixel.
struct RegionOffset {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t side = 0;

  std::int64_t pixels() const noexcept { return std::int64_t{side} * side; }
  bool inside(std::int64_t n) const noexcept {
    return x >= 0 && y >= 0 && side >= 1 && x + side <= n && y + side <= n;
  }
  friend bool operator==(const RegionOffset&, const RegionOffset&) = default;
};

/// Number of distinct border pixels of a region of the given side.
constexpr std::int64_t perimeter_pixels(std::int64_t side) noexcept {
  return side <= 1 ? side : 4 * side - 4;
}

}  // namespace ssdiv

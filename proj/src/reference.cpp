#include "ssdiv/reference.hpp"

#include <vector>

namespace ssdiv::reference {

DwellGrid exhaustive_render_serial(std::int64_t n, const Viewport& vp, Dwell d_max) {
  DwellGrid grid(n, vp, d_max);
  for (std::int64_t row = 0; row < n; ++row)
    for (std::int64_t col = 0; col < n; ++col)
      grid.at(row, col) = dwell(pixel_to_complex(row, col, n, vp), d_max);
  return grid;
}

namespace {

void subdivide(DwellGrid& grid, std::int64_t x, std::int64_t y, std::int64_t side, std::int64_t r,
               std::int64_t B) {
  const std::int64_t n = grid.n();
  std::vector<Dwell> border;
  for (std::int64_t k = 0; k < side; ++k) {
    border.push_back(dwell(pixel_to_complex(y, x + k, n, grid.viewport()), grid.d_max()));
    border.push_back(dwell(pixel_to_complex(y + side - 1, x + k, n, grid.viewport()), grid.d_max()));
    border.push_back(dwell(pixel_to_complex(y + k, x, n, grid.viewport()), grid.d_max()));
    border.push_back(dwell(pixel_to_complex(y + k, x + side - 1, n, grid.viewport()), grid.d_max()));
  }
  bool uniform = true;
  for (Dwell d : border) uniform = uniform && d == border.front();

  if (uniform) {
    for (std::int64_t row = y; row < y + side; ++row)
      for (std::int64_t col = x; col < x + side; ++col) grid.at(row, col) = border.front();
  } else if (side / r < B) {
    for (std::int64_t row = y; row < y + side; ++row)
      for (std::int64_t col = x; col < x + side; ++col)
        grid.at(row, col) = dwell(pixel_to_complex(row, col, n, grid.viewport()), grid.d_max());
  } else {
    const std::int64_t child = side / r;
    for (std::int64_t cy = 0; cy < r; ++cy)
      for (std::int64_t cx = 0; cx < r; ++cx) subdivide(grid, x + cx * child, y + cy * child, child, r, B);
  }
}

}  // namespace

DwellGrid mariani_silver_serial(std::int64_t n, const Viewport& vp, Dwell d_max, std::int64_t g,
                                std::int64_t r, std::int64_t B) {
  AskConfig{g, r, B}.validate(n);
  DwellGrid grid(n, vp, d_max);
  const std::int64_t side = n / g;
  for (std::int64_t gy = 0; gy < g; ++gy)
    for (std::int64_t gx = 0; gx < g; ++gx) subdivide(grid, gx * side, gy * side, side, r, B);
  return grid;
}

}  // namespace ssdiv::reference

#include "ssdiv/fractal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ssdiv/cost_model.hpp"
#include "ssdiv/parallel.hpp"

namespace ssdiv {

void Viewport::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw InvalidParams("Viewport: bounds must satisfy min < max on both axes");
}

DwellGrid::DwellGrid(std::int64_t n, Viewport vp, Dwell d_max, Dwell init)
    : n_(n), d_max_(d_max), vp_(vp) {
  if (n < 1) throw InvalidParams("DwellGrid: n must be >= 1");
  if (d_max < 1) throw InvalidParams("DwellGrid: d_max must be >= 1");
  vp.validate();
  cells_.assign(static_cast<std::size_t>(n * n), init);
}

std::complex<double> pixel_to_complex(std::int64_t row, std::int64_t col, std::int64_t n,
                                      const Viewport& vp) {
  if (n < 1 || row < 0 || col < 0 || row >= n || col >= n)
    throw std::out_of_range("pixel_to_complex: pixel (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside " + std::to_string(n) + "x" +
                            std::to_string(n));
  const double side = static_cast<double>(n);
  const double re = vp.re_min + (static_cast<double>(col) + 0.5) * (vp.re_max - vp.re_min) / side;
  const double im = vp.im_min + (static_cast<double>(row) + 0.5) * (vp.im_max - vp.im_min) / side;
  return {re, im};
}

Dwell dwell(std::complex<double> c, Dwell d_max) noexcept {
  const double cr = c.real();
  const double ci = c.imag();
  double zr = 0.0;
  double zi = 0.0;
  for (Dwell i = 1; i <= d_max; ++i) {
    const double zr2 = zr * zr;
    const double zi2 = zi * zi;
    const double next_r = zr2 - zi2 + cr;
    zi = 2.0 * zr * zi + ci;
    zr = next_r;
    if (zr * zr + zi * zi > 4.0) return i;
  }
  return d_max;
}

std::optional<Dwell> perimeter_common_dwell(const GridGeometry& geom, const RegionOffset& region,
                                            std::int64_t* evaluated) {
  if (region.side < 1) throw InvalidParams("perimeter_common_dwell: empty region");
  if (!region.inside(geom.n)) throw std::out_of_range("perimeter_common_dwell: region outside grid");

  std::int64_t count = 0;
  const std::int64_t x0 = region.x;
  const std::int64_t y0 = region.y;
  const std::int64_t s = region.side;

  const Dwell first = pixel_dwell(geom, y0, x0);
  ++count;
  bool uniform = true;
  auto check = [&](std::int64_t row, std::int64_t col) {
    ++count;
    if (pixel_dwell(geom, row, col) != first) uniform = false;
    return uniform;
  };

  // Top row, bottom row, then the side columns without corners.
  for (std::int64_t col = x0 + 1; uniform && col < x0 + s; ++col) check(y0, col);
  if (s > 1)
    for (std::int64_t col = x0; uniform && col < x0 + s; ++col) check(y0 + s - 1, col);
  for (std::int64_t row = y0 + 1; uniform && row < y0 + s - 1; ++row) {
    if (check(row, x0)) check(row, x0 + s - 1);
  }

  if (evaluated != nullptr) *evaluated = count;
  if (!uniform) return std::nullopt;
  return first;
}

void fill_region(DwellGrid& grid, const RegionOffset& region, Dwell value) {
  if (!region.inside(grid.n())) throw std::out_of_range("fill_region: region outside grid");
  if (value < 1 || value > grid.d_max()) throw InvalidParams("fill_region: value outside [1, d_max]");
  for (std::int64_t row = region.y; row < region.y + region.side; ++row) {
    auto line = grid.cells().subspan(static_cast<std::size_t>(row * grid.n() + region.x),
                                     static_cast<std::size_t>(region.side));
    std::fill(line.begin(), line.end(), value);
  }
}

void compute_region(DwellGrid& grid, const RegionOffset& region) {
  if (!region.inside(grid.n())) throw std::out_of_range("compute_region: region outside grid");
  const GridGeometry geom{grid.n(), grid.viewport(), grid.d_max()};
  for (std::int64_t row = region.y; row < region.y + region.side; ++row)
    for (std::int64_t col = region.x; col < region.x + region.side; ++col)
      grid.at(row, col) = pixel_dwell(geom, row, col);
}

DwellGrid exhaustive_render(std::int64_t n, const Viewport& vp, Dwell d_max, int workers) {
  DwellGrid grid(n, vp, d_max);
  const GridGeometry geom{n, vp, d_max};
  const int nthreads = resolve_workers(workers);

#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 1)
  for (std::int64_t row = 0; row < n; ++row)
    for (std::int64_t col = 0; col < n; ++col) grid.at(row, col) = pixel_dwell(geom, row, col);

  return grid;
}

std::int64_t count_mismatches(const DwellGrid& a, const DwellGrid& b) {
  if (a.n() != b.n()) throw InvalidParams("count_mismatches: grid sizes differ");
  const auto ca = a.cells();
  const auto cb = b.cells();
  std::int64_t diff = 0;
  for (std::size_t k = 0; k < ca.size(); ++k) diff += ca[k] != cb[k] ? 1 : 0;
  return diff;
}

double mismatch_ppm(const DwellGrid& a, const DwellGrid& b) {
  const double total = static_cast<double>(a.n()) * static_cast<double>(a.n());
  return static_cast<double>(count_mismatches(a, b)) * 1e6 / total;
}

}  // namespace ssdiv

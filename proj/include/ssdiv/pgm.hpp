#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ssdiv/fractal.hpp"

namespace ssdiv::pgm {

/// 8-bit grayscale raster.
struct GrayImage {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// round(255 * d / d_max), halves rounded up.
std::uint8_t gray_value(Dwell d, Dwell d_max) noexcept;

GrayImage quantize(const DwellGrid& grid);

/// Binary P5, maxval 255.
void write(std::ostream& out, const GrayImage& image);
void write_file(const std::string& path, const GrayImage& image);

/// Reads binary P5 with maxval <= 255 (header comments allowed).
GrayImage read(std::istream& in);
GrayImage read_file(const std::string& path);

struct Comparison {
  std::int64_t total_pixels = 0;
  std::int64_t mismatched = 0;
  double mismatch_ppm = 0.0;
};

/// Throws std::invalid_argument on differing dimensions.
Comparison compare(const GrayImage& a, const GrayImage& b);

}  // namespace ssdiv::pgm

#include "ssdiv/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ssdiv::pgm {

std::uint8_t gray_value(Dwell d, Dwell d_max) noexcept {
  const std::int64_t num = 2 * 255 * std::int64_t{d} + d_max;
  return static_cast<std::uint8_t>(num / (2 * std::int64_t{d_max}));
}

GrayImage quantize(const DwellGrid& grid) {
  GrayImage image{grid.n(), grid.n(), {}};
  image.pixels.reserve(grid.cells().size());
  for (Dwell d : grid.cells()) image.pixels.push_back(gray_value(d, grid.d_max()));
  return image;
}

void write(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

void write_file(const std::string& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot open '" + path + "' for writing");
  write(out, image);
  if (!out) throw std::runtime_error("pgm: write to '" + path + "' failed");
}

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::int64_t header_number(std::istream& in) {
  int ch = in.peek();
  while (ch != EOF) {
    if (std::isspace(ch)) {
      in.get();
    } else if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else {
      break;
    }
    ch = in.peek();
  }
  std::int64_t value = -1;
  if (!(in >> value) || value < 0) throw std::runtime_error("pgm: malformed header");
  return value;
}

}  // namespace

GrayImage read(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
    throw std::runtime_error("pgm: not a binary P5 file");
  GrayImage image;
  image.width = header_number(in);
  image.height = header_number(in);
  const std::int64_t maxval = header_number(in);
  if (maxval < 1 || maxval > 255) throw std::runtime_error("pgm: only 8-bit maxval supported");
  if (!std::isspace(in.get())) throw std::runtime_error("pgm: malformed header");
  image.pixels.resize(static_cast<std::size_t>(image.width * image.height));
  if (!in.read(reinterpret_cast<char*>(image.pixels.data()),
               static_cast<std::streamsize>(image.pixels.size())))
    throw std::runtime_error("pgm: truncated pixel data");
  return image;
}

GrayImage read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open '" + path + "'");
  return read(in);
}

Comparison compare(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("pgm: image dimensions differ");
  Comparison c;
  c.total_pixels = a.width * a.height;
  for (std::size_t k = 0; k < a.pixels.size(); ++k) c.mismatched += a.pixels[k] != b.pixels[k] ? 1 : 0;
  c.mismatch_ppm = c.total_pixels == 0 ? 0.0
                                       : static_cast<double>(c.mismatched) * 1e6 /
                                             static_cast<double>(c.total_pixels);
  return c;
}

}  // namespace ssdiv::pgm

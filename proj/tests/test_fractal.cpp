#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "ssdiv/fractal.hpp"
#include "ssdiv/pgm.hpp"
#include "ssdiv/reference.hpp"

using namespace ssdiv;

TEST_CASE("dwell examples") {
  CHECK(dwell({0.0, 0.0}, 512) == 512);
  CHECK(dwell({3.0, 0.0}, 512) == 1);
  CHECK(dwell({1.0, 0.0}, 512) == 3);   // 0 -> 1 -> 2 -> 5
  CHECK(dwell({-1.0, 0.0}, 512) == 512);  // period-2 cycle
  CHECK(dwell({-2.0, 0.0}, 64) == 64);  // boundary point stays at |z| = 2
  CHECK(dwell({0.0, 0.0}, 1) == 1);
}

TEST_CASE("pixel_to_complex samples pixel centres") {
  const Viewport vp{-2.0, 2.0, -1.0, 1.0};
  const auto c = pixel_to_complex(0, 0, 4, vp);
  CHECK(c.real() == -1.5);
  CHECK(c.imag() == -0.75);
  const auto d = pixel_to_complex(3, 3, 4, vp);
  CHECK(d.real() == 1.5);
  CHECK(d.imag() == 0.75);
  CHECK_THROWS_AS(pixel_to_complex(4, 0, 4, vp), std::out_of_range);
  CHECK_THROWS_AS(pixel_to_complex(0, -1, 4, vp), std::out_of_range);
}

TEST_CASE("viewport validation") {
  CHECK_NOTHROW(kStudyViewport.validate());
  CHECK_THROWS(Viewport{1.0, 1.0, 0.0, 1.0}.validate());
  CHECK_THROWS(Viewport{0.0, 1.0, 2.0, 1.0}.validate());
}

TEST_CASE("perimeter_common_dwell") {
  const GridGeometry geom{64, kStudyViewport, 256};
  SUBCASE("interior of the main cardioid is uniform") {
    // Pixels around c = -0.2 lie deep in the cardioid.
    const RegionOffset region{40, 30, 4};
    std::int64_t evaluated = 0;
    const auto v = perimeter_common_dwell(geom, region, &evaluated);
    REQUIRE(v.has_value());
    CHECK(*v == 256);
    CHECK(evaluated == perimeter_pixels(4));
  }
  SUBCASE("boundary region exits early") {
    const RegionOffset whole{0, 0, 64};
    std::int64_t evaluated = 0;
    CHECK_FALSE(perimeter_common_dwell(geom, whole, &evaluated).has_value());
    CHECK(evaluated < perimeter_pixels(64));
    CHECK(evaluated >= 2);
  }
  SUBCASE("single pixel") {
    std::int64_t evaluated = 0;
    const auto v = perimeter_common_dwell(geom, RegionOffset{5, 7, 1}, &evaluated);
    REQUIRE(v.has_value());
    CHECK(*v == pixel_dwell(geom, 7, 5));
    CHECK(evaluated == 1);
  }
}

TEST_CASE("fill and compute regions") {
  DwellGrid grid(8, kStudyViewport, 64, 0);
  fill_region(grid, RegionOffset{2, 4, 4}, 9);
  std::int64_t nines = 0;
  for (auto d : grid.cells()) nines += d == 9;
  CHECK(nines == 16);
  CHECK(grid.at(4, 2) == 9);
  CHECK(grid.at(7, 5) == 9);
  CHECK(grid.at(3, 2) == 0);

  compute_region(grid, RegionOffset{0, 0, 8});
  const GridGeometry geom{8, kStudyViewport, 64};
  for (std::int64_t row = 0; row < 8; ++row)
    for (std::int64_t col = 0; col < 8; ++col) CHECK(grid.at(row, col) == pixel_dwell(geom, row, col));
}

TEST_CASE("exhaustive render matches the golden image") {
  const DwellGrid grid = exhaustive_render(512, kStudyViewport, kStudyDwell, 1);
  const auto& cells = grid.cells();
  // Frozen from an independent array-language implementation.
  CHECK(std::accumulate(cells.begin(), cells.end(), std::int64_t{0}) == 52593878);
  CHECK(std::count(cells.begin(), cells.end(), kStudyDwell) == 99192);

  const auto golden = pgm::read_file(std::string(SSDIV_TEST_DATA) + "/golden_512.pgm");
  CHECK(pgm::compare(pgm::quantize(grid), golden).mismatched == 0);
}

TEST_CASE("parallel exhaustive equals the serial reference") {
  const auto serial = reference::exhaustive_render_serial(256, kStudyViewport, 300);
  for (int workers : {1, 2, 4}) CHECK(exhaustive_render(256, kStudyViewport, 300, workers) == serial);
}

TEST_CASE("mismatch counting") {
  DwellGrid a(16, kStudyViewport, 10, 1);
  DwellGrid b = a;
  CHECK(count_mismatches(a, b) == 0);
  b.at(3, 4) = 2;
  b.at(15, 15) = 7;
  CHECK(count_mismatches(a, b) == 2);
  CHECK(mismatch_ppm(a, b) == doctest::Approx(2.0 / 256.0 * 1e6));
  CHECK_THROWS(count_mismatches(a, DwellGrid(8, kStudyViewport, 10)));
}

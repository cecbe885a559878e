#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "ssdiv/cost_model.hpp"
#include "ssdiv/linearize.hpp"

using namespace ssdiv;

TEST_CASE("canonical_index examples") {
  const std::vector<std::int64_t> p2{1, 2};
  CHECK(canonical_index(p2, GridDims{{4, 4}}) == 9);
  const std::vector<std::int64_t> p3{1, 2, 3};
  CHECK(canonical_index(p3, GridDims{{4, 4, 4}}) == 57);
  const std::vector<std::int64_t> origin{0, 0, 0};
  CHECK(canonical_index(origin, GridDims{{3, 5, 7}}) == 0);
  const std::vector<std::int64_t> last{2, 4, 6};
  CHECK(canonical_index(last, GridDims{{3, 5, 7}}) == 104);
}

TEST_CASE("canonical_index validation") {
  const std::vector<std::int64_t> p{4, 0};
  CHECK_THROWS(canonical_index(p, GridDims{{4, 4}}));
  const std::vector<std::int64_t> short_p{1};
  CHECK_THROWS(canonical_index(short_p, GridDims{{4, 4}}));
  CHECK_THROWS(GridDims{{}}.validate());
  CHECK_THROWS(GridDims{{4, 0}}.validate());
  CHECK_THROWS(canonical_inverse(16, GridDims{{4, 4}}));
}

TEST_CASE("bijection on every grid up to 8 per axis, ranks 1 to 4") {
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    std::vector<std::int64_t> dims(rank, 1);
    for (;;) {
      const GridDims g{dims};
      const auto volume = g.volume();
      std::vector<char> seen(static_cast<std::size_t>(volume), 0);
      for (std::int64_t s = 0; s < volume; ++s) {
        const auto p = canonical_inverse(s, g);
        const auto back = canonical_index(p, g);
        if (back != s) FAIL("round trip failed at ", s);
        seen[static_cast<std::size_t>(back)] = 1;
      }
      for (char c : seen) if (!c) FAIL("index not hit");
      std::size_t d = 0;
      while (d < rank && ++dims[d] > 8) dims[d++] = 1;
      if (d == rank) break;
    }
  }
}

TEST_CASE("olt_size_k") {
  const std::vector<std::int64_t> square{4, 4};
  CHECK(olt_size_k(10, square) == 160);
  const std::vector<std::int64_t> cube{2, 2, 2};
  CHECK(olt_size_k(3, cube) == 24);
  CHECK(olt_size_k(0, cube) == 0);
  CHECK_THROWS(olt_size_k(-1, cube));
}

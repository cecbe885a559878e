#pragma once

#include <cstdint>
#include <vector>

#include "ssdiv/ask_engine.hpp"
#include "ssdiv/fractal.hpp"

namespace ssdiv {

struct TreeStats {
  std::int64_t spawned_tasks = 0;  // region tasks, roots included
  int max_depth = 0;               // deepest level reached, counting the roots as 1
  std::vector<LevelStats> levels;  // same tallies as the ASK per-level stats
};

struct RecursiveResult {
  DwellGrid grid;
  TreeStats stats;
};

/// Mariani-Silver as nested fork-join tasks: every region is a task that
/// either fills, computes its pixels, or spawns r*r child tasks and waits.
RecursiveResult recursive_render(std::int64_t n, const Viewport& vp, Dwell d_max,
                                 const AskConfig& config);

}  // namespace ssdiv

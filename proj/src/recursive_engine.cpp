#include "ssdiv/recursive_engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>

#include "ssdiv/parallel.hpp"

namespace ssdiv {

namespace {

constexpr int kMaxLevels = 64;

struct TaskContext {
  DwellGrid* grid;
  GridGeometry geom;
  const AskConfig* config;
  std::atomic<std::int64_t> spawned{0};
  std::atomic<int> max_depth{0};
  struct Tally {
    std::atomic<std::int64_t> regions_in{0}, filled{0}, subdivided{0}, leaf_processed{0};
    std::atomic<std::int64_t> q_pixels{0}, t_pixels{0}, a_pixels{0};
  };
  Tally per_level[kMaxLevels];
  std::mutex error_mutex;
  std::exception_ptr error;

  void record_error() {
    std::lock_guard<std::mutex> lock(error_mutex);
    if (!error) error = std::current_exception();
  }
};

void pixel_work(TaskContext& ctx, const RegionOffset& region, WorkKind kind, Dwell value) {
  const auto tiles = scheme_dispatch(region, kind, *ctx.config);
  if (tiles.size() == 1) {
    if (kind == WorkKind::Fill)
      fill_region(*ctx.grid, region, value);
    else
      compute_region(*ctx.grid, region);
    return;
  }
  for (const auto& tile : tiles) {
#pragma omp task firstprivate(tile) shared(ctx)
    {
      try {
        if (kind == WorkKind::Fill)
          fill_region(*ctx.grid, tile, value);
        else
          compute_region(*ctx.grid, tile);
      } catch (...) {
        ctx.record_error();
      }
    }
  }
#pragma omp taskwait
}

void region_task(TaskContext& ctx, RegionOffset region, int level) {
  ctx.spawned.fetch_add(1, std::memory_order_relaxed);
  auto& tally = ctx.per_level[level];
  tally.regions_in.fetch_add(1, std::memory_order_relaxed);
  int seen = ctx.max_depth.load(std::memory_order_relaxed);
  while (seen < level + 1 &&
         !ctx.max_depth.compare_exchange_weak(seen, level + 1, std::memory_order_relaxed)) {
  }

  try {
    std::int64_t evaluated = 0;
    const auto common = perimeter_common_dwell(ctx.geom, region, &evaluated);
    tally.q_pixels.fetch_add(evaluated, std::memory_order_relaxed);
    if (common) {
      tally.filled.fetch_add(1, std::memory_order_relaxed);
      tally.t_pixels.fetch_add(region.pixels(), std::memory_order_relaxed);
      pixel_work(ctx, region, WorkKind::Fill, *common);
      return;
    }
    const AskConfig& cfg = *ctx.config;
    if (region.side / cfg.r < cfg.B) {
      tally.leaf_processed.fetch_add(1, std::memory_order_relaxed);
      tally.a_pixels.fetch_add(region.pixels(), std::memory_order_relaxed);
      pixel_work(ctx, region, WorkKind::Leaf, 0);
      return;
    }
    if (level + 1 >= kMaxLevels) throw std::length_error("recursive_render: subdivision too deep");
    tally.subdivided.fetch_add(1, std::memory_order_relaxed);
    const auto child_side = static_cast<std::int32_t>(region.side / cfg.r);
    for (std::int64_t cy = 0; cy < cfg.r; ++cy)
      for (std::int64_t cx = 0; cx < cfg.r; ++cx) {
        const RegionOffset child{region.x + static_cast<std::int32_t>(cx) * child_side,
                                 region.y + static_cast<std::int32_t>(cy) * child_side, child_side};
#pragma omp task firstprivate(child, level) shared(ctx)
        region_task(ctx, child, level + 1);
      }
#pragma omp taskwait
  } catch (...) {
    ctx.record_error();
  }
}

}  // namespace

RecursiveResult recursive_render(std::int64_t n, const Viewport& vp, Dwell d_max,
                                 const AskConfig& config) {
  config.validate(n);
  RecursiveResult out{DwellGrid(n, vp, d_max), {}};

  TaskContext ctx;
  ctx.grid = &out.grid;
  ctx.geom = GridGeometry{n, vp, d_max};
  ctx.config = &config;

  const std::int64_t g = config.g;
  const auto side = static_cast<std::int32_t>(n / g);
  const int nthreads = resolve_workers(config.workers);

#pragma omp parallel num_threads(nthreads) shared(ctx)
#pragma omp single
  {
    for (std::int64_t gy = 0; gy < g; ++gy)
      for (std::int64_t gx = 0; gx < g; ++gx) {
        const RegionOffset root{static_cast<std::int32_t>(gx) * side,
                                static_cast<std::int32_t>(gy) * side, side};
#pragma omp task firstprivate(root) shared(ctx)
        region_task(ctx, root, 0);
      }
#pragma omp taskwait
  }

  if (ctx.error) std::rethrow_exception(ctx.error);

  out.stats.spawned_tasks = ctx.spawned.load();
  out.stats.max_depth = ctx.max_depth.load();
  for (int level = 0; level < out.stats.max_depth; ++level) {
    const auto& t = ctx.per_level[level];
    out.stats.levels.push_back(LevelStats{level, t.regions_in.load(), t.filled.load(),
                                          t.subdivided.load(), t.leaf_processed.load(),
                                          t.q_pixels.load(), t.t_pixels.load(), t.a_pixels.load()});
  }
  return out;
}

}  // namespace ssdiv

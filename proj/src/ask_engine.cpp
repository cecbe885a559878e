#include "ssdiv/ask_engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssdiv/cost_model.hpp"
#include "ssdiv/parallel.hpp"

namespace ssdiv {

std::string_view to_string(Scheme s) noexcept { return s == Scheme::SBR ? "SBR" : "MBR"; }

Scheme parse_scheme(std::string_view text) {
  if (text == "SBR" || text == "sbr") return Scheme::SBR;
  if (text == "MBR" || text == "mbr") return Scheme::MBR;
  throw InvalidParams("unknown scheme '" + std::string(text) + "' (expected SBR or MBR)");
}

void AskConfig::validate(std::int64_t n) const {
  if (!is_power_of_two(n) || n > kMaxSide) throw InvalidParams("AskConfig: n must be a power of two");
  if (!is_power_of_two(g)) throw InvalidParams("AskConfig: g must be a power of two");
  if (!is_power_of_two(r) || r < 2) throw InvalidParams("AskConfig: r must be a power of two >= 2");
  if (!is_power_of_two(B)) throw InvalidParams("AskConfig: B must be a power of two");
  if (g > n || B > n || g * B > n) throw InvalidParams("AskConfig: g*B must not exceed n");
  if (!exact_tiling(n, g, r, B))
    throw InvalidParams("AskConfig: n must equal g*B*r^k for an integer k >= 0");
  if (tile < 1) throw InvalidParams("AskConfig: tile must be >= 1");
  if (workers < 0) throw InvalidParams("AskConfig: workers must be >= 0");
}

std::size_t reserve_slots(std::size_t& counter, std::size_t k, std::size_t capacity) {
  if (k < 1) throw std::invalid_argument("reserve_slots: k must be >= 1");
  const std::size_t previous = std::atomic_ref<std::size_t>(counter).fetch_add(1);
  const std::size_t base = previous * k;
  if (base + k > capacity)
    throw std::length_error("reserve_slots: OLT capacity " + std::to_string(capacity) +
                            " exceeded");
  return base;
}

void Olt::reallocate(std::size_t capacity, std::size_t group) {
  if (group < 1) throw std::invalid_argument("Olt: group must be >= 1");
  slots_.resize(capacity);
  capacity_ = capacity;
  group_ = group;
  count_ = 0;
}

Olt initial_grid(std::int64_t n, std::int64_t g) {
  if (!is_power_of_two(n) || !is_power_of_two(g) || g > n)
    throw InvalidParams("initial_grid: g must be a power of two dividing n");
  const auto side = static_cast<std::int32_t>(n / g);
  Olt olt;
  olt.reallocate(static_cast<std::size_t>(g * g), 1);
  for (std::int64_t gy = 0; gy < g; ++gy)
    for (std::int64_t gx = 0; gx < g; ++gx)
      olt.put(olt.reserve(), RegionOffset{static_cast<std::int32_t>(gx) * side,
                                          static_cast<std::int32_t>(gy) * side, side});
  return olt;
}

std::vector<RegionOffset> scheme_dispatch(const RegionOffset& region, WorkKind kind,
                                          const AskConfig& config) {
  const bool tiled = config.scheme == Scheme::MBR && (kind == WorkKind::Fill || kind == WorkKind::Leaf);
  if (!tiled || region.side <= config.tile) return {region};

  const auto tile = static_cast<std::int32_t>(config.tile);
  std::vector<RegionOffset> tasks;
  const std::int32_t per_axis = (region.side + tile - 1) / tile;
  tasks.reserve(static_cast<std::size_t>(per_axis) * static_cast<std::size_t>(per_axis));
  for (std::int32_t ty = 0; ty < region.side; ty += tile)
    for (std::int32_t tx = 0; tx < region.side; tx += tile) {
      const std::int32_t w = std::min(tile, region.side - tx);
      const std::int32_t h = std::min(tile, region.side - ty);
      // A ragged w x h remainder is covered by squares of side gcd(w, h).
      const std::int32_t s = std::gcd(w, h);
      for (std::int32_t oy = 0; oy < h; oy += s)
        for (std::int32_t ox = 0; ox < w; ox += s)
          tasks.push_back(RegionOffset{region.x + tx + ox, region.y + ty + oy, s});
    }
  return tasks;
}

namespace {

enum class Decision : std::uint8_t { Fill, Leaf, Subdivide };

struct RegionOutcome {
  Decision decision = Decision::Leaf;
  Dwell value = 0;
};

// Captures the first exception thrown inside an OpenMP region so it can be
// rethrown on the calling thread.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

LevelResult process_level(const Olt& read, DwellGrid& grid, const AskConfig& config, int level,
                          Olt recycled) {
  const auto entries = read.entries();
  const std::int64_t regions = static_cast<std::int64_t>(entries.size());
  const std::size_t children = static_cast<std::size_t>(config.r * config.r);

  LevelResult result{std::move(recycled), LevelStats{}};
  result.write.reallocate(entries.size() * children, children);
  result.stats.level = level;
  result.stats.regions_in = regions;
  if (regions == 0) return result;

  const std::int32_t side = entries.front().side;
  for (const auto& e : entries)
    if (e.side != side) throw InvalidParams("process_level: read OLT mixes region sides");

  const GridGeometry geom{grid.n(), grid.viewport(), grid.d_max()};
  const bool subdivides = side / config.r >= config.B;
  const auto child_side = static_cast<std::int32_t>(side / config.r);
  const bool mbr = config.scheme == Scheme::MBR;
  const int nthreads = resolve_workers(config.workers);

  std::vector<RegionOutcome> outcomes(mbr ? entries.size() : 0);
  Olt& write = result.write;
  ErrorSlot errors;

  std::int64_t filled = 0, subdivided = 0, leaves = 0, q_pixels = 0, t_pixels = 0, a_pixels = 0;

#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 1) \
    reduction(+ : filled, subdivided, leaves, q_pixels, t_pixels, a_pixels)
  for (std::int64_t k = 0; k < regions; ++k) {
    errors.run([&] {
      const RegionOffset& region = entries[static_cast<std::size_t>(k)];
      std::int64_t evaluated = 0;
      const auto common = perimeter_common_dwell(geom, region, &evaluated);
      q_pixels += evaluated;

      RegionOutcome outcome;
      if (common) {
        outcome = {Decision::Fill, *common};
        ++filled;
        t_pixels += region.pixels();
      } else if (!subdivides) {
        outcome = {Decision::Leaf, 0};
        ++leaves;
        a_pixels += region.pixels();
      } else {
        outcome = {Decision::Subdivide, 0};
        ++subdivided;
        const std::size_t base = write.reserve();
        std::size_t slot = base;
        for (std::int64_t cy = 0; cy < config.r; ++cy)
          for (std::int64_t cx = 0; cx < config.r; ++cx)
            write.put(slot++, RegionOffset{region.x + static_cast<std::int32_t>(cx) * child_side,
                                           region.y + static_cast<std::int32_t>(cy) * child_side,
                                           child_side});
      }

      if (mbr) {
        outcomes[static_cast<std::size_t>(k)] = outcome;
      } else if (outcome.decision == Decision::Fill) {
        fill_region(grid, region, outcome.value);
      } else if (outcome.decision == Decision::Leaf) {
        compute_region(grid, region);
      }
    });
  }
  errors.rethrow();

  if (mbr) {
    struct TileTask {
      RegionOffset tile;
      RegionOutcome outcome;
    };
    std::vector<TileTask> tasks;
    for (std::int64_t k = 0; k < regions; ++k) {
      const RegionOutcome& outcome = outcomes[static_cast<std::size_t>(k)];
      if (outcome.decision == Decision::Subdivide) continue;
      const WorkKind kind = outcome.decision == Decision::Fill ? WorkKind::Fill : WorkKind::Leaf;
      for (const auto& tile : scheme_dispatch(entries[static_cast<std::size_t>(k)], kind, config))
        tasks.push_back(TileTask{tile, outcome});
    }
    const auto ntasks = static_cast<std::int64_t>(tasks.size());

#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 1)
    for (std::int64_t t = 0; t < ntasks; ++t) {
      const TileTask& task = tasks[static_cast<std::size_t>(t)];
      errors.run([&] {
        if (task.outcome.decision == Decision::Fill)
          fill_region(grid, task.tile, task.outcome.value);
        else
          compute_region(grid, task.tile);
      });
    }
    errors.rethrow();
  }

  result.stats.filled = filled;
  result.stats.subdivided = subdivided;
  result.stats.leaf_processed = leaves;
  result.stats.q_pixels = q_pixels;
  result.stats.t_pixels = t_pixels;
  result.stats.a_pixels = a_pixels;
  return result;
}

RenderResult ask_render(std::int64_t n, const Viewport& vp, Dwell d_max, const AskConfig& config,
                        const LevelObserver& observer) {
  config.validate(n);
  RenderResult out{DwellGrid(n, vp, d_max), {}};

  Olt read = initial_grid(n, config.g);
  Olt spare;
  for (int level = 0; !read.empty(); ++level) {
    LevelResult step = process_level(read, out.grid, config, level, std::move(spare));
    out.levels.push_back(step.stats);
    if (observer) observer(read, step);
    // The old read buffer becomes next level's write buffer.
    spare = std::move(read);
    read = std::move(step.write);
  }
  return out;
}

}  // namespace ssdiv

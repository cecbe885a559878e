#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ssdiv/fractal.hpp"
#include "ssdiv/region.hpp"

namespace ssdiv {

enum class Scheme { SBR, MBR };

std::string_view to_string(Scheme s) noexcept;
Scheme parse_scheme(std::string_view text);

struct AskConfig {
  std::int64_t g = 32;
  std::int64_t r = 4;
  std::int64_t B = 16;
  Scheme scheme = Scheme::SBR;
  std::int64_t tile = 16;  // MBR tile side (pixels)
  int workers = 0;         // 0: resolve_workers()

  /// Throws InvalidParams unless n = g*B*r^k with everything a power of two.
  void validate(std::int64_t n) const;
};

struct LevelStats {
  int level = 0;
  std::int64_t regions_in = 0;
  std::int64_t filled = 0;
  std::int64_t subdivided = 0;
  std::int64_t leaf_processed = 0;
  std::int64_t q_pixels = 0;  // perimeter dwell evaluations
  std::int64_t t_pixels = 0;  // pixels written by uniform fills
  std::int64_t a_pixels = 0;  // per-pixel dwell evaluations at leaves

  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

/// Atomically claims the next group of `k` consecutive slots. `counter`
/// counts reservations; the returned base is (previous count) * k. Throws
/// std::length_error if the group would run past `capacity`.
std::size_t reserve_slots(std::size_t& counter, std::size_t k, std::size_t capacity);

/// Offset lookup table: a compact array of active regions. Entries are
/// appended in groups of `group()` slots through reserve(), so after a pass
/// the first count() * group() slots are all valid.
class Olt {
 public:
  Olt() = default;

  /// Resizes the slot buffer to `capacity` (keeping its memory) and resets
  /// the reservation counter.
  void reallocate(std::size_t capacity, std::size_t group);

  /// Thread-safe; returns the base slot of a fresh group.
  std::size_t reserve() { return reserve_slots(count_, group_, capacity_); }

  /// Writes slot `index`; callers must own the slot through reserve().
  void put(std::size_t index, const RegionOffset& region) noexcept { slots_[index] = region; }

  std::size_t count() const noexcept { return count_; }
  std::size_t group() const noexcept { return group_; }
  std::size_t size() const noexcept { return count_ * group_; }
  std::size_t capacity() const noexcept { return capacity_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const RegionOffset> entries() const noexcept {
    return std::span<const RegionOffset>(slots_).first(size());
  }

 private:
  std::vector<RegionOffset> slots_;
  std::size_t capacity_ = 0;
  std::size_t group_ = 1;
  std::size_t count_ = 0;
};

/// g x g regions of side n/g tiling the domain, in canonical (row-major) order.
Olt initial_grid(std::int64_t n, std::int64_t g);

enum class WorkKind { Perimeter, Insert, Fill, Leaf };

/// Task decomposition of one region's work. SBR and all perimeter/insert
/// work map to a single task; MBR fill/leaf work is split into tile x tile
/// pieces (clipped to the region).
std::vector<RegionOffset> scheme_dispatch(const RegionOffset& region, WorkKind kind,
                                          const AskConfig& config);

struct LevelResult {
  Olt write;
  LevelStats stats;
};

/// One serial-kernel pass over the read OLT. `recycled` donates its buffer to
/// the new write OLT, sized read.size() * r^2.
LevelResult process_level(const Olt& read, DwellGrid& grid, const AskConfig& config, int level = 0,
                          Olt recycled = {});

struct RenderResult {
  DwellGrid grid;
  std::vector<LevelStats> levels;
};

/// Called after every level with the OLT that was read and the level result.
using LevelObserver = std::function<void(const Olt& read, const LevelResult& result)>;

RenderResult ask_render(std::int64_t n, const Viewport& vp, Dwell d_max, const AskConfig& config,
                        const LevelObserver& observer = {});

}  // namespace ssdiv

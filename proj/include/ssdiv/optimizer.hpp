#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ssdiv/ask_engine.hpp"
#include "ssdiv/cost_model.hpp"
#include "ssdiv/fractal.hpp"

namespace ssdiv {

enum class Objective { MinWork, MinTimeSbr, MinTimeMbr, MinWallTime };

std::string_view to_string(Objective o) noexcept;
Objective parse_objective(std::string_view text);

/// {2, 4, ..., 1024}
std::vector<std::int64_t> default_candidates();

struct SweepSpec {
  std::vector<std::int64_t> g_set = default_candidates();
  std::vector<std::int64_t> r_set = default_candidates();
  std::vector<std::int64_t> B_set = default_candidates();
  Objective objective = Objective::MinTimeSbr;
  ModelParams fixed{};  // n, P, A, lambda, q, c; g/r/B are ignored

  void validate() const;
};

struct LandscapePoint {
  std::int64_t g = 0;
  std::int64_t r = 0;
  std::int64_t B = 0;
  std::optional<double> value;  // empty for infeasible triples
  double stderr_value = 0.0;    // timing spread for empirical sweeps

  bool feasible() const noexcept { return value.has_value(); }
};

struct SweepResult {
  LandscapePoint best;
  std::vector<LandscapePoint> landscape;  // every (g, r, B) in nesting order
  std::optional<double> best_mismatch_ppm;  // empirical sweeps: best config vs exhaustive
};

/// Thrown when no candidate triple tiles the domain exactly.
class NoFeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive sweep of the analytic objective. Ties go to the
/// lexicographically smallest (g, r, B).
SweepResult grid_search_model(const SweepSpec& spec, int workers = 0);

enum class Engine { Ask, Recursive };

std::string_view to_string(Engine e) noexcept;
Engine parse_engine(std::string_view text);

struct EmpiricalSpec {
  Engine engine = Engine::Ask;
  Scheme scheme = Scheme::SBR;
  std::int64_t n = 1024;
  Viewport vp = kStudyViewport;
  Dwell d_max = kStudyDwell;
  int reps = 5;
  std::int64_t tile = 16;
  int workers = 0;
  bool oracle_check = true;
};

/// Times every feasible triple (mean of `reps` runs after one warm-up) and
/// returns the fastest. Configs run strictly one after another.
SweepResult grid_search_empirical(const SweepSpec& spec, const EmpiricalSpec& run);

}  // namespace ssdiv

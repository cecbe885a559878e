#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ssdiv/ask_engine.hpp"
#include "ssdiv/fractal.hpp"
#include "ssdiv/optimizer.hpp"

/// Subcommands behind the `ssdiv` executable. Each returns the process exit
/// code: 0 success, 1 verification or feasibility failure, 2 usage error.
namespace ssdiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

Viewport parse_viewport(std::string_view text);

struct ModelOptions {
  std::vector<std::int64_t> n{1024};
  // Empty g/r/B lists mean {2}/{2}/{32}, or {2..1024} each with `optimize`.
  std::vector<std::int64_t> g;
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> B;
  std::vector<double> P{0.5};
  std::vector<double> A{512.0};
  std::vector<double> lambda{10.0};
  std::vector<std::int64_t> q{128};
  std::vector<std::int64_t> c{64};
  /// When set, g/r/B lists become sweep candidates and each row carries the
  /// optimum for this objective.
  std::optional<Objective> optimize;
  std::uint64_t trials = 0;  // > 0 appends Monte-Carlo columns
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out;  // empty: stdout
};

int cmd_model(const ModelOptions& opt, std::ostream& out, std::ostream& err);

enum class Approach { EX, ASK_SBR, ASK_MBR, REC_SBR, REC_MBR };

std::string_view to_string(Approach a) noexcept;
Approach parse_approach(std::string_view text);

struct RenderOptions {
  std::string approach = "ask";  // ex | ask | rec
  std::int64_t n = 512;
  Viewport vp = kStudyViewport;
  Dwell dwell = kStudyDwell;
  std::int64_t g = 32;
  std::int64_t r = 4;
  std::int64_t B = 16;
  Scheme scheme = Scheme::SBR;
  std::int64_t tile = 16;
  int workers = 0;
  std::string out = "render.pgm";
  std::string stats;  // optional per-level CSV
};

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err);

struct BenchRecord {
  Approach approach = Approach::EX;
  std::int64_t n = 0, g = 0, r = 0, B = 0, tile = 0;
  int workers = 0;
  double mean_ms = 0.0;
  double stderr_ms = 0.0;
  int reps = 0;
  double mismatch_ppm = 0.0;
};

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

struct BenchOptions {
  std::vector<std::string> approaches{"EX", "ASK_SBR"};
  std::vector<std::int64_t> n{1024};
  Viewport vp = kStudyViewport;
  Dwell dwell = kStudyDwell;
  std::int64_t g = 32;
  std::int64_t r = 4;
  std::int64_t B = 16;
  std::string optimal;  // landscape CSV supplying g/r/B
  std::int64_t tile = 16;
  int workers = 0;
  int reps = 5;
  std::string out;  // empty: stdout
};

std::vector<BenchRecord> run_bench(const BenchOptions& opt, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

/// Reads a `g,r,B,feasible,value` landscape and returns the feasible row with
/// the smallest value.
LandscapePoint best_from_landscape(const std::string& path);

void write_landscape_csv(std::ostream& out, const std::vector<LandscapePoint>& points);

struct OptimizeOptions {
  std::string engine = "model";  // model | ask | rec
  Scheme scheme = Scheme::SBR;
  std::optional<Objective> objective;
  std::vector<std::int64_t> g_set = default_candidates();
  std::vector<std::int64_t> r_set = default_candidates();
  std::vector<std::int64_t> B_set = default_candidates();
  std::int64_t n = 65536;
  double P = 0.5;
  double A = 512.0;
  double lambda = 10.0;
  std::int64_t q = 128;
  std::int64_t c = 64;
  Viewport vp = kStudyViewport;
  Dwell dwell = kStudyDwell;
  std::int64_t tile = 16;
  int reps = 5;
  int workers = 0;
  std::string out;  // landscape CSV; empty: not written
};

int cmd_optimize(const OptimizeOptions& opt, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& file_a, const std::string& file_b, std::ostream& out,
               std::ostream& err);

}  // namespace ssdiv::cli

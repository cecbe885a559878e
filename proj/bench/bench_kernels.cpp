// Serial reference kernels vs. their OpenMP counterparts on the case-study
// viewport. Usage: bench_kernels [n] [reps]
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "ssdiv/ask_engine.hpp"
#include "ssdiv/cost_model.hpp"
#include "ssdiv/fractal.hpp"
#include "ssdiv/recursive_engine.hpp"
#include "ssdiv/reference.hpp"
#include "ssdiv/timing.hpp"

using namespace ssdiv;

namespace {

// Halves g until the configuration tiles n exactly.
AskConfig fit(AskConfig c, std::int64_t n) {
  while (c.g > 1 && !exact_tiling(n, c.g, c.r, c.B)) c.g /= 2;
  c.validate(n);
  return c;
}

std::string label(const char* kind, const AskConfig& c) {
  return std::string(kind) + "{" + std::to_string(c.g) + "," + std::to_string(c.r) + "," +
         std::to_string(c.B) + "}/omp";
}

void report(const std::string& name, int workers, const Timing& t, double baseline_ms) {
  std::printf("%-28s %3d %12.3f %10.3f %8.2fx\n", name.c_str(), workers, t.mean_ms, t.stderr_ms,
              baseline_ms / t.mean_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 2048;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  const int max_workers = omp_get_max_threads();
  const Viewport vp = kStudyViewport;
  const Dwell d = kStudyDwell;
  if (!is_power_of_two(n) || n < 64) {
    std::fprintf(stderr, "n must be a power of two >= 64\n");
    return EXIT_FAILURE;
  }
  const AskConfig sbr = fit({32, 4, 16, Scheme::SBR, 16, 0}, n);
  const AskConfig mbr = fit({32, 2, 32, Scheme::MBR, 16, 0}, n);

  std::printf("n=%lld dwell=%d reps=%d max_workers=%d\n", static_cast<long long>(n), d, reps,
              max_workers);
  std::printf("%-28s %3s %12s %10s %9s\n", "kernel", "w", "mean_ms", "stderr_ms", "vs_serial");

  const Timing serial_ex =
      time_runs([&] { (void)reference::exhaustive_render_serial(n, vp, d); }, reps);
  report("exhaustive/serial", 1, serial_ex, serial_ex.mean_ms);
  for (int w = 1; w <= max_workers; w *= 2)
    report("exhaustive/omp", w, time_runs([&] { (void)exhaustive_render(n, vp, d, w); }, reps),
           serial_ex.mean_ms);

  const Timing serial_ms = time_runs(
      [&] { (void)reference::mariani_silver_serial(n, vp, d, sbr.g, sbr.r, sbr.B); }, reps);
  report("mariani-silver/serial", 1, serial_ms, serial_ms.mean_ms);
  for (int w = 1; w <= max_workers; w *= 2) {
    AskConfig a = sbr;
    a.workers = w;
    AskConfig b = mbr;
    b.workers = w;
    report(label("ask-sbr", a), w, time_runs([&] { (void)ask_render(n, vp, d, a); }, reps),
           serial_ms.mean_ms);
    report(label("ask-mbr", b), w, time_runs([&] { (void)ask_render(n, vp, d, b); }, reps),
           serial_ms.mean_ms);
    report(label("rec-sbr", a), w, time_runs([&] { (void)recursive_render(n, vp, d, a); }, reps),
           serial_ms.mean_ms);
  }
  return EXIT_SUCCESS;
}

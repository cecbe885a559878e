#pragma once

#include <chrono>
#include <cmath>
#include <vector>

namespace ssdiv {

struct Timing {
  double mean_ms = 0.0;
  double stderr_ms = 0.0;
  int reps = 0;
};

/// Runs `fn` once untimed, then `reps` timed runs on a monotonic clock.
template <class F>
Timing time_runs(F&& fn, int reps) {
  using clock = std::chrono::steady_clock;
  fn();
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int k = 0; k < reps; ++k) {
    const auto start = clock::now();
    fn();
    const std::chrono::duration<double, std::milli> elapsed = clock::now() - start;
    samples.push_back(elapsed.count());
  }
  Timing t;
  t.reps = reps;
  if (samples.empty()) return t;
  double sum = 0.0;
  for (double s : samples) sum += s;
  t.mean_ms = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - t.mean_ms) * (s - t.mean_ms);
    const double n = static_cast<double>(samples.size());
    t.stderr_ms = std::sqrt(ss / (n - 1.0) / n);
  }
  return t;
}

}  // namespace ssdiv

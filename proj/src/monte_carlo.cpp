#include "ssdiv/monte_carlo.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "ssdiv/parallel.hpp"

namespace ssdiv {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SSDIV_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

CounterRng::result_type CounterRng::operator()() noexcept {
  // Two rounds of the splitmix finalizer over (key, counter).
  const std::uint64_t c = counter_++;
  return mix64(mix64(key_ + c * 0xd1b54a32d192ed03ULL) ^ key_);
}

MonteCarloEstimate simulate_subdivision_work(const ModelParams& params, std::uint64_t trials,
                                             std::uint64_t seed, int workers) {
  params.validate();
  const int tau = depth_tau(params);
  return simulate_subdivision_work(params, ProbProfile::constant(params.P, tau),
                                   mandelbrot_costs(params), trials, seed, workers);
}

MonteCarloEstimate simulate_subdivision_work(const ModelParams& params, const ProbProfile& probs,
                                             const LevelCosts& costs, std::uint64_t trials,
                                             std::uint64_t seed, int workers) {
  const int tau = depth_tau(params);
  const auto levels = static_cast<std::size_t>(tau - 1);
  if (probs.per_level.size() != levels || costs.query.size() != levels ||
      costs.terminal.size() != levels)
    throw InvalidParams("simulate_subdivision_work: per-level inputs need tau-1 entries");
  if (trials < 1) throw InvalidParams("simulate_subdivision_work: trials must be >= 1");

  const std::int64_t G = params.g * params.g;
  const std::int64_t R = params.r * params.r;
  std::int64_t last_regions = G;
  for (std::size_t i = 0; i < levels; ++i) last_regions *= R;
  const double elements_per_leaf =
      static_cast<double>(params.n) * static_cast<double>(params.n) / static_cast<double>(last_regions);

  std::vector<double> totals(trials);
  const int nthreads = resolve_workers(workers);

#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t));
    std::int64_t regions = G;
    double work = 0.0;
    for (std::size_t i = 0; i < levels && regions > 0; ++i) {
      std::binomial_distribution<std::int64_t> split(regions, probs.per_level[i]);
      const std::int64_t subdividing = split(rng);
      const std::int64_t terminating = regions - subdividing;
      work += static_cast<double>(regions) * costs.query[i] +
              static_cast<double>(subdividing) * costs.subdivide +
              static_cast<double>(terminating) * costs.terminal[i];
      regions = subdividing * R;
    }
    work += static_cast<double>(regions) * elements_per_leaf * params.A;
    totals[static_cast<std::size_t>(t)] = work;
  }

  // Serial reduction keeps the result independent of the thread count.
  double sum = 0.0;
  bool constant = true;
  for (double w : totals) {
    sum += w;
    constant = constant && w == totals.front();
  }
  const double mean = constant ? totals.front() : sum / static_cast<double>(trials);
  double ss = 0.0;
  for (double w : totals) ss += (w - mean) * (w - mean);

  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = mean;
  est.stderr_mean =
      trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials)) : 0.0;
  return est;
}

}  // namespace ssdiv

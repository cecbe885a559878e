#pragma once

#include <cstdint>
#include <limits>

#include "ssdiv/cost_model.hpp"

namespace ssdiv {

/// Stateless counter-based generator: the n-th output of stream `key` is a
/// pure function of (key, n), so every trial owns an independent,
/// reproducible stream regardless of which thread runs it.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;  // standard error of the mean
  std::uint64_t trials = 0;
};

/// Monte-Carlo estimate of the Mariani-Silver subdivision work: the region
/// tree is grown level by level, each level-i region (i <= tau-2) subdividing
/// with probability P and paying Q_i + S, or terminating and paying Q_i + T_i.
/// Surviving last-level regions pay A per element. Deterministic per seed and
/// independent of the worker count.
MonteCarloEstimate simulate_subdivision_work(const ModelParams& params, std::uint64_t trials,
                                             std::uint64_t seed, int workers = 0);

/// Same tree process with arbitrary per-level probabilities and costs.
MonteCarloEstimate simulate_subdivision_work(const ModelParams& params, const ProbProfile& probs,
                                             const LevelCosts& costs, std::uint64_t trials,
                                             std::uint64_t seed, int workers = 0);

}  // namespace ssdiv

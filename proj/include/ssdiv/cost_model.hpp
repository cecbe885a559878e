#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ssdiv {

/// Thrown when a parameter bundle or configuration violates its invariants.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kMaxSide = std::int64_t{1} << 30;

bool is_power_of_two(std::int64_t v);

/// Every symbol of the subdivision cost model in one validated bundle.
///
/// `n`, `g`, `r`, `B` are powers of two with g*B <= n and n = g*B*r^k for
/// some integer k >= 0 (exact tiling). Use make_params() or validate() to
/// enforce this; the aggregate itself is left open for designated
/// initializers.
struct ModelParams {
  std::int64_t n = 1024;   // domain side (pixels)
  std::int64_t g = 2;      // initial subdivision per axis
  std::int64_t r = 2;      // recurrent subdivision per axis
  std::int64_t B = 32;     // stopping region side (pixels)
  double P = 0.5;          // per-level subdivision probability
  double A = 512.0;        // application work per element
  double lambda = 10.0;    // S = lambda * A
  std::int64_t q = 128;    // multiprocessors
  std::int64_t c = 64;     // cores per multiprocessor

  void validate() const;
  bool is_valid() const noexcept;
};

/// Validates and returns `p`; throws InvalidParams otherwise.
ModelParams make_params(const ModelParams& p);

/// True iff n = g*B*r^k for integer k >= 0 with all sides powers of two.
bool exact_tiling(std::int64_t n, std::int64_t g, std::int64_t r, std::int64_t B) noexcept;

/// Per-level subdivision probabilities P_0..P_{tau-2}.
struct ProbProfile {
  std::vector<double> per_level;

  static ProbProfile constant(double p, int tau);
};

struct CostReport {
  int tau = 1;
  std::vector<double> per_level_K;
  double L = 0.0;
  double W_total = 0.0;
  double W_E = 0.0;
  double omega = 1.0;
  double T_ex = 0.0;
  double T_sbr = 0.0;
  double T_mbr = 0.0;
  double S_sbr = 1.0;
  double S_mbr = 1.0;
};

/// Depth tau = log_r(n / (g*B)), clamped to a minimum of 1.
int depth_tau(const ModelParams& params);

double exhaustive_work(std::int64_t n, double A);

/// Work of a subdivision scheme with per-level probabilities and constant
/// per-region costs: query `Q`, subdivision `S`, terminal `T`.
double general_subdivision_work(const ModelParams& params, const ProbProfile& probs, double Q,
                                double S, double T);

/// Per-region costs per level for the general form. `query[i]` and
/// `terminal[i]` are the cost of one level-i region; both need tau-1 entries.
struct LevelCosts {
  std::vector<double> query;
  std::vector<double> terminal;
  double subdivide = 0.0;
};

double general_subdivision_work(const ModelParams& params, const ProbProfile& probs,
                                const LevelCosts& costs);

/// Mariani-Silver costs: Q_i = 4nA/(g r^i), T_i = n^2/(G R^i), S = lambda*A.
double mandelbrot_query_cost(const ModelParams& params, int level);
double mandelbrot_terminal_cost(const ModelParams& params, int level);
LevelCosts mandelbrot_costs(const ModelParams& params);

/// Self-similar-density work for the Mandelbrot instantiation. Fills tau,
/// per_level_K, L, W_total, W_E and omega.
CostReport ssd_work(const ModelParams& params);

double work_reduction_factor(const ModelParams& params);

double exhaustive_time(const ModelParams& params);
double sbr_time(const ModelParams& params);
double mbr_time(const ModelParams& params);

struct Speedups {
  double sbr = 1.0;
  double mbr = 1.0;
};

Speedups speedups(const ModelParams& params);

/// Full report: work fields plus times and speedups.
CostReport evaluate(const ModelParams& params);

}  // namespace ssdiv

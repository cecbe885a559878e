#include "ssdiv/cost_model.hpp"

#include <cmath>
#include <string>

namespace ssdiv {

namespace {

// ceil(a / b) for positive integers; always >= 1.
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

}  // namespace

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

bool exact_tiling(std::int64_t n, std::int64_t g, std::int64_t r, std::int64_t B) noexcept {
  if (!is_power_of_two(n) || !is_power_of_two(g) || !is_power_of_two(r) || !is_power_of_two(B))
    return false;
  if (r < 2 || g > n || B > n || g * B > n) return false;
  std::int64_t quotient = n / (g * B);
  while (quotient > 1) {
    if (quotient % r != 0) return false;
    quotient /= r;
  }
  return quotient == 1;
}

void ModelParams::validate() const {
  auto fail = [](const std::string& what) { throw InvalidParams("ModelParams: " + what); };
  if (!is_power_of_two(n) || n > kMaxSide) fail("n must be a power of two <= 2^30");
  if (!is_power_of_two(g)) fail("g must be a power of two");
  if (!is_power_of_two(r) || r < 2) fail("r must be a power of two >= 2");
  if (!is_power_of_two(B)) fail("B must be a power of two");
  if (g > n || B > n || g * B > n) fail("g*B must not exceed n");
  if (!exact_tiling(n, g, r, B)) fail("n/(g*B) must be an integer power of r");
  if (!(P >= 0.0 && P <= 1.0)) fail("P must lie in [0,1]");
  if (!(A >= 1.0)) fail("A must be >= 1");
  if (!(lambda >= 0.0)) fail("lambda must be >= 0");
  if (q < 1) fail("q must be >= 1");
  if (c < 1) fail("c must be >= 1");
}

bool ModelParams::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const InvalidParams&) {
    return false;
  }
}

ModelParams make_params(const ModelParams& p) {
  p.validate();
  return p;
}

ProbProfile ProbProfile::constant(double p, int tau) {
  return ProbProfile{std::vector<double>(static_cast<std::size_t>(tau > 1 ? tau - 1 : 0), p)};
}

int depth_tau(const ModelParams& params) {
  if (params.g * params.B > params.n) throw InvalidParams("depth_tau: g*B exceeds n");
  std::int64_t quotient = params.n / (params.g * params.B);
  int levels = 0;
  while (quotient >= params.r) {
    quotient /= params.r;
    ++levels;
  }
  return levels < 1 ? 1 : levels;
}

double exhaustive_work(std::int64_t n, double A) {
  const double side = static_cast<double>(n);
  return side * side * A;
}

double general_subdivision_work(const ModelParams& params, const ProbProfile& probs, double Q,
                                double S, double T) {
  const int tau = depth_tau(params);
  const auto levels = static_cast<std::size_t>(tau - 1);
  return general_subdivision_work(params, probs,
                                  LevelCosts{std::vector<double>(levels, Q),
                                             std::vector<double>(levels, T), S});
}

double general_subdivision_work(const ModelParams& params, const ProbProfile& probs,
                                const LevelCosts& costs) {
  const int tau = depth_tau(params);
  const auto levels = static_cast<std::size_t>(tau - 1);
  if (probs.per_level.size() != levels)
    throw InvalidParams("general_subdivision_work: probability profile needs tau-1 entries");
  if (costs.query.size() != levels || costs.terminal.size() != levels)
    throw InvalidParams("general_subdivision_work: level costs need tau-1 entries");
  for (double p : probs.per_level)
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParams("general_subdivision_work: P_i outside [0,1]");

  const double G = static_cast<double>(params.g * params.g);
  const double R = static_cast<double>(params.r * params.r);

  double total = 0.0;
  double survival = 1.0;  // prod_{j<i} P_j
  double regions = G;     // G R^i
  for (std::size_t i = 0; i < levels; ++i) {
    const double p = probs.per_level[i];
    const double u = p * (costs.query[i] + costs.subdivide) +
                     (1.0 - p) * (costs.query[i] + costs.terminal[i]);
    total += u * regions * survival;
    survival *= p;
    regions *= R;
  }
  return total + exhaustive_work(params.n, params.A) * survival;
}

double mandelbrot_query_cost(const ModelParams& params, int level) {
  const double n = static_cast<double>(params.n);
  const double side_div = static_cast<double>(params.g * ipow(params.r, level));
  return 4.0 * n * params.A / side_div;
}

double mandelbrot_terminal_cost(const ModelParams& params, int level) {
  const double n = static_cast<double>(params.n);
  const double regions = static_cast<double>(params.g * params.g * ipow(params.r * params.r, level));
  return n * n / regions;
}

LevelCosts mandelbrot_costs(const ModelParams& params) {
  const int tau = depth_tau(params);
  LevelCosts costs;
  costs.subdivide = params.lambda * params.A;
  for (int i = 0; i + 1 < tau; ++i) {
    costs.query.push_back(mandelbrot_query_cost(params, i));
    costs.terminal.push_back(mandelbrot_terminal_cost(params, i));
  }
  return costs;
}

CostReport ssd_work(const ModelParams& params) {
  params.validate();
  CostReport report;
  report.tau = depth_tau(params);

  const double n = static_cast<double>(params.n);
  const double g = static_cast<double>(params.g);
  const double r = static_cast<double>(params.r);
  const double G = g * g;
  const double R = r * r;
  const double P = params.P;
  const double A = params.A;

  double W = 0.0;
  for (int i = 0; i + 1 < report.tau; ++i) {
    const double Ri = std::pow(R, i);
    const double ri = std::pow(r, i);
    const double per_region = 4.0 * n * A / (g * ri) + P * (params.lambda * A) +
                              (1.0 - P) * n * n / (G * Ri);
    const double K = per_region * G * Ri * std::pow(P, i);
    report.per_level_K.push_back(K);
    W += K;
  }
  report.L = n * n * A * std::pow(P, report.tau - 1);
  report.W_total = W + report.L;
  report.W_E = exhaustive_work(params.n, A);
  report.omega = report.W_E / report.W_total;
  return report;
}

double work_reduction_factor(const ModelParams& params) { return ssd_work(params).omega; }

double exhaustive_time(const ModelParams& params) {
  params.validate();
  return static_cast<double>(ceil_div(params.n * params.n, params.q * params.c)) * params.A;
}

double sbr_time(const ModelParams& params) {
  params.validate();
  const int tau = depth_tau(params);
  const std::int64_t n = params.n;
  const std::int64_t G = params.g * params.g;
  const std::int64_t R = params.r * params.r;
  const double P = params.P;
  const double A = params.A;
  const double S = params.lambda * A;

  double T = 0.0;
  for (int i = 0; i + 1 < tau; ++i) {
    const std::int64_t regions = G * ipow(R, i);
    const std::int64_t perim = ceil_div(4 * n, params.g * ipow(params.r, i) * params.c);
    const std::int64_t fill = ceil_div(n * n, regions * params.c);
    const std::int64_t waves = ceil_div(regions, params.q);
    T += (static_cast<double>(perim) * A + P * S + (1.0 - P) * static_cast<double>(fill)) *
         static_cast<double>(waves) * std::pow(P, i);
  }
  const std::int64_t last_regions = G * ipow(R, tau - 1);
  T += A * static_cast<double>(ceil_div(n * n, last_regions * params.c)) *
       static_cast<double>(ceil_div(last_regions, params.q)) * std::pow(P, tau - 1);
  return T;
}

double mbr_time(const ModelParams& params) {
  params.validate();
  const int tau = depth_tau(params);
  const std::int64_t n = params.n;
  const std::int64_t G = params.g * params.g;
  const std::int64_t R = params.r * params.r;
  const double P = params.P;
  const double A = params.A;
  const double S = params.lambda * A;
  const double cores = static_cast<double>(params.q * params.c);

  double T = 0.0;
  for (int i = 0; i + 1 < tau; ++i) {
    const std::int64_t regions = G * ipow(R, i);
    const double perim =
        static_cast<double>(ceil_div(4 * n, params.g * ipow(params.r, i) * params.c));
    const double waves = static_cast<double>(ceil_div(regions, params.q));
    const double Pi = std::pow(P, i);
    const double terminal =
        std::ceil(static_cast<double>(n) * static_cast<double>(n) * Pi * (1.0 - P) / cores);
    T += perim * waves * A * Pi + waves * S * Pi * P + terminal;
  }
  T += A * static_cast<double>(ceil_div(n * n, params.q * params.c)) * std::pow(P, tau - 1);
  return T;
}

Speedups speedups(const ModelParams& params) {
  const double ex = exhaustive_time(params);
  return Speedups{ex / sbr_time(params), ex / mbr_time(params)};
}

CostReport evaluate(const ModelParams& params) {
  CostReport report = ssd_work(params);
  report.T_ex = exhaustive_time(params);
  report.T_sbr = sbr_time(params);
  report.T_mbr = mbr_time(params);
  report.S_sbr = report.T_ex / report.T_sbr;
  report.S_mbr = report.T_ex / report.T_mbr;
  return report;
}

}  // namespace ssdiv

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "ssdiv/cost_model.hpp"
#include "ssdiv/monte_carlo.hpp"

using namespace ssdiv;
using boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

namespace {

// Exact re-derivation of the SBR/MBR sums for dyadic P. Independent of the
// floating-point implementation: every term is a rational number.
cpp_int ceil_div(cpp_int a, cpp_int b) { return (a + b - 1) / b; }

cpp_int ceil_q(const cpp_rational& x) {
  const cpp_int num = boost::multiprecision::numerator(x);
  const cpp_int den = boost::multiprecision::denominator(x);
  cpp_int q = num / den;
  if (q * den < num) q += 1;
  return q;
}

cpp_rational rpow(const cpp_rational& b, int e) {
  cpp_rational v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

cpp_int ipow(std::int64_t b, int e) {
  cpp_int v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

int oracle_tau(std::int64_t n, std::int64_t g, std::int64_t r, std::int64_t B) {
  std::int64_t x = n / (g * B);
  int t = 0;
  while (x >= r) {
    x /= r;
    ++t;
  }
  return std::max(t, 1);
}

struct ExactCase {
  std::int64_t n, g, r, B;
  cpp_rational P;
  std::int64_t A, lambda, q, c;

  ModelParams params() const {
    return ModelParams{n, g, r, B, P.convert_to<double>(), static_cast<double>(A),
                       static_cast<double>(lambda), q, c};
  }
};

cpp_rational exact_sbr(const ExactCase& k) {
  const int t = oracle_tau(k.n, k.g, k.r, k.B);
  const cpp_int n = k.n, G = k.g * k.g, A = k.A, S = k.lambda * k.A;
  cpp_rational T = 0;
  for (int i = 0; i + 1 < t; ++i) {
    const cpp_int regions = G * ipow(k.r * k.r, i);
    const cpp_rational level = cpp_rational(ceil_div(4 * n, k.g * ipow(k.r, i) * k.c) * A) +
                               k.P * cpp_rational(S) +
                               (1 - k.P) * cpp_rational(ceil_div(n * n, regions * k.c));
    T += level * cpp_rational(ceil_div(regions, k.q)) * rpow(k.P, i);
  }
  const cpp_int last = G * ipow(k.r * k.r, t - 1);
  T += cpp_rational(A * ceil_div(n * n, last * k.c) * ceil_div(last, k.q)) * rpow(k.P, t - 1);
  return T;
}

cpp_rational exact_mbr(const ExactCase& k) {
  const int t = oracle_tau(k.n, k.g, k.r, k.B);
  const cpp_int n = k.n, G = k.g * k.g, A = k.A, S = k.lambda * k.A;
  cpp_rational T = 0;
  for (int i = 0; i + 1 < t; ++i) {
    const cpp_int regions = G * ipow(k.r * k.r, i);
    const cpp_rational waves = cpp_rational(ceil_div(regions, k.q));
    T += cpp_rational(ceil_div(4 * n, k.g * ipow(k.r, i) * k.c)) * waves * cpp_rational(A) *
         rpow(k.P, i);
    T += waves * cpp_rational(S) * rpow(k.P, i + 1);
    T += cpp_rational(ceil_q(cpp_rational(n * n) * rpow(k.P, i) * (1 - k.P) /
                             cpp_rational(k.q * k.c)));
  }
  T += cpp_rational(A * ceil_div(n * n, k.q * k.c)) * rpow(k.P, t - 1);
  return T;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Random valid parameter bundle with exact tiling.
ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> log_n(1, 16);
  for (;;) {
    ModelParams p;
    p.n = std::int64_t{1} << log_n(rng);
    p.g = std::int64_t{1} << std::uniform_int_distribution<int>(0, 10)(rng);
    p.r = std::int64_t{1} << std::uniform_int_distribution<int>(1, 10)(rng);
    p.B = std::int64_t{1} << std::uniform_int_distribution<int>(0, 10)(rng);
    if (!exact_tiling(p.n, p.g, p.r, p.B)) continue;
    p.P = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    p.A = std::uniform_real_distribution<double>(1.0, 4096.0)(rng);
    p.lambda = std::uniform_real_distribution<double>(0.0, 1e4)(rng);
    p.q = std::uniform_int_distribution<std::int64_t>(1, 256)(rng);
    p.c = std::uniform_int_distribution<std::int64_t>(1, 256)(rng);
    return p;
  }
}

}  // namespace

TEST_CASE("ModelParams validation") {
  CHECK(ModelParams{}.is_valid());
  CHECK_THROWS_AS(make_params({.n = 1000}), InvalidParams);
  CHECK_THROWS_AS(make_params({.n = 1024, .g = 64, .B = 32}), InvalidParams);  // g*B > n
  CHECK_THROWS_AS(make_params({.n = 1024, .g = 4, .r = 4, .B = 128}), InvalidParams);  // 2 != 4^k
  CHECK_THROWS_AS(make_params({.r = 1}), InvalidParams);
  CHECK_THROWS_AS(make_params({.P = 1.5}), InvalidParams);
  CHECK_THROWS_AS(make_params({.A = 0.5}), InvalidParams);
  CHECK_THROWS_AS(make_params({.lambda = -1.0}), InvalidParams);
  CHECK_THROWS_AS(make_params({.q = 0}), InvalidParams);
  CHECK_THROWS_AS(make_params({.c = 0}), InvalidParams);
  CHECK(exact_tiling(65536, 16, 2, 32));
  CHECK_FALSE(exact_tiling(4096, 32, 4, 16));
}

TEST_CASE("depth_tau") {
  CHECK(depth_tau({.n = 65536, .g = 16, .r = 2, .B = 32}) == 7);
  CHECK(depth_tau({.n = 256, .g = 2, .r = 2, .B = 128}) == 1);
  CHECK(depth_tau({.n = 1024, .g = 4, .r = 4, .B = 16}) == 2);
  CHECK_THROWS_AS(depth_tau({.n = 256, .g = 4, .r = 2, .B = 128}), InvalidParams);
}

TEST_CASE("exhaustive_work") {
  CHECK(exhaustive_work(4, 1) == 16);
  CHECK(exhaustive_work(1024, 512) == 536870912.0);
  CHECK(exhaustive_work(1, 512) == 512);
}

TEST_CASE("general_subdivision_work") {
  SUBCASE("tau = 1 leaves only the last level") {
    const ModelParams p{.n = 256, .g = 2, .r = 2, .B = 128, .A = 7};
    CHECK(general_subdivision_work(p, ProbProfile{}, 10, 2, 16) == exhaustive_work(256, 7));
  }
  SUBCASE("zero probability keeps only level 0") {
    const ModelParams p{.n = 64, .g = 2, .r = 2, .B = 8, .A = 4};  // tau = 2
    CHECK(general_subdivision_work(p, ProbProfile{{0.0}}, 10, 2, 16) == 4 * (10 + 16));
  }
  SUBCASE("hand value and Monte-Carlo oracle") {
    const ModelParams p{.n = 64, .g = 2, .r = 2, .B = 8, .A = 4};
    // U_0 = 0.5*12 + 0.5*26 = 19; K_0 = 19*4; L = 64^2*4*0.5.
    const double exact = general_subdivision_work(p, ProbProfile{{0.5}}, 10, 2, 16);
    CHECK(exact == 76 + 8192);
    const LevelCosts costs{{10.0}, {16.0}, 2.0};
    const auto mc = simulate_subdivision_work(p, ProbProfile{{0.5}}, costs, 100000, 7);
    CHECK(rel_diff(mc.mean, exact) < 0.01);
  }
  SUBCASE("profile length must be tau-1") {
    const ModelParams p{.n = 64, .g = 2, .r = 2, .B = 8, .A = 4};
    CHECK_THROWS_AS(general_subdivision_work(p, ProbProfile{{0.5, 0.5}}, 1, 1, 1), InvalidParams);
  }
}

TEST_CASE("ssd_work") {
  SUBCASE("tau = 1") {
    const auto rep = ssd_work({.n = 256, .g = 2, .r = 2, .B = 128, .A = 512});
    CHECK(rep.tau == 1);
    CHECK(rep.per_level_K.empty());
    CHECK(rep.W_total == 33554432.0);
    CHECK(rep.omega == 1.0);
  }
  SUBCASE("P = 0 reduces to 4ngA + n^2") {
    const auto rep = ssd_work({.n = 1024, .g = 4, .r = 2, .B = 64, .P = 0.0, .A = 512});
    CHECK(rep.tau == 2);
    CHECK(rep.W_total == 9437184.0);
    CHECK(rep.omega == doctest::Approx(56.8888888889).epsilon(1e-10));
    CHECK(work_reduction_factor({.n = 1024, .g = 4, .r = 2, .B = 64, .P = 0.0, .A = 512}) ==
          doctest::Approx(536870912.0 / 9437184.0));
  }
  SUBCASE("frozen exact values for n=4096 g=16 r=2 B=32 A=512 lambda=10") {
    // Computed with rational arithmetic.
    const double expected[] = {150994944.0, 754581504.0, 2430468096.0, 5178654720.0, 8999141376.0};
    const double probs[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int k = 0; k < 5; ++k) {
      const ModelParams p{.n = 4096, .g = 16, .r = 2, .B = 32, .P = probs[k], .A = 512, .lambda = 10};
      CHECK(ssd_work(p).W_total == expected[k]);
    }
  }
  SUBCASE("W_total is the sum of its parts") {
    const auto rep = ssd_work({.n = 65536, .g = 16, .r = 2, .B = 8, .P = 0.6});
    double sum = rep.L;
    for (double k : rep.per_level_K) sum += k;
    CHECK(rep.W_total == doctest::Approx(sum).epsilon(1e-15));
  }
}

TEST_CASE("general form with Mandelbrot costs agrees with ssd_work") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const ModelParams p = random_params(rng);
    const int tau = depth_tau(p);
    const double general =
        general_subdivision_work(p, ProbProfile::constant(p.P, tau), mandelbrot_costs(p));
    CHECK(rel_diff(general, ssd_work(p).W_total) < 1e-12);
  }
}

TEST_CASE("exhaustive_time") {
  CHECK(exhaustive_time({.n = 1024, .A = 512, .q = 128, .c = 64}) == 65536.0);
  CHECK(exhaustive_time({.n = 8, .g = 2, .B = 4, .A = 1, .q = 128, .c = 64}) == 1.0);
  CHECK(exhaustive_time({.n = 65536, .A = 512, .q = 128, .c = 64}) == 268435456.0);
}

TEST_CASE("sbr_time and mbr_time") {
  SUBCASE("tau = 1") {
    const ModelParams p{.n = 1024, .g = 16, .r = 2, .B = 64, .A = 512, .q = 128, .c = 64};
    REQUIRE(depth_tau(p) == 1);
    CHECK(sbr_time(p) == 65536.0);
    CHECK(mbr_time(p) == 65536.0);
    const auto s = speedups(p);
    CHECK(s.sbr == 1.0);
    CHECK(s.mbr == 1.0);
  }
  SUBCASE("P = 0 keeps only the i = 0 terms") {
    const ModelParams p{.n = 1024, .g = 4, .r = 2, .B = 64, .P = 0.0, .A = 512, .q = 128, .c = 64};
    // SBR: (ceil(4096/256)*512 + ceil(2^20/(16*64))) * ceil(16/128)
    CHECK(sbr_time(p) == 16.0 * 512 + 1024);
    // MBR: ceil(4096/256)*ceil(16/128)*512 + 0 + ceil(2^20/8192)
    CHECK(mbr_time(p) == 16.0 * 512 + 128);
  }
  SUBCASE("frozen exact values") {
    const ModelParams p{.n = 4096, .g = 16, .r = 2, .B = 32, .P = 0.5, .A = 512, .lambda = 10,
                        .q = 128, .c = 64};
    CHECK(sbr_time(p) == 311808.0);
    CHECK(mbr_time(p) == 311808.0);
    const ModelParams big{.n = 65536, .g = 8, .r = 2, .B = 8, .P = 0.5, .A = 512, .lambda = 10,
                          .q = 128, .c = 64};
    CHECK(sbr_time(big) == 3275776.0);
    CHECK(mbr_time(big) == 3013632.0);
  }
  SUBCASE("rational-arithmetic oracle") {
    const ExactCase cases[] = {
        {4096, 16, 2, 32, cpp_rational(1, 2), 512, 10, 128, 64},
        {65536, 8, 2, 8, cpp_rational(1, 2), 512, 10, 128, 64},
        {65536, 16, 4, 16, cpp_rational(1, 4), 512, 100, 128, 64},
        {16384, 2, 2, 2, cpp_rational(3, 4), 64, 1, 80, 32},
        {1024, 1, 16, 4, cpp_rational(1, 8), 100, 0, 7, 3},
        {256, 1, 2, 1, cpp_rational(15, 16), 1, 1000, 1, 1},
    };
    for (const auto& k : cases) {
      const ModelParams p = k.params();
      CHECK(rel_diff(sbr_time(p), exact_sbr(k).convert_to<double>()) < 1e-12);
      CHECK(rel_diff(mbr_time(p), exact_mbr(k).convert_to<double>()) < 1e-12);
    }
  }
}

TEST_CASE("upper bounds and monotonicity over random parameters") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 2000; ++k) {
    const ModelParams p = random_params(rng);
    const auto rep = evaluate(p);
    CHECK(rep.omega <= p.A);
    CHECK(rep.omega > 0.0);
    CHECK(rep.S_sbr <= p.A);
    CHECK(rep.S_mbr <= p.A);
    CHECK(rep.T_ex >= 1.0);
    CHECK(rep.T_sbr >= 1.0);
    CHECK(rep.T_mbr >= 1.0);

    ModelParams heavier = p;
    heavier.A = p.A * 2.0;
    CHECK(exhaustive_time(heavier) >= rep.T_ex);
    CHECK(sbr_time(heavier) >= rep.T_sbr);
    CHECK(mbr_time(heavier) >= rep.T_mbr);
  }
}

TEST_CASE("tau = 1 configurations degenerate to exhaustive") {
  for (std::int64_t n = 2; n <= 65536; n *= 2)
    for (std::int64_t g = 1; g <= n; g *= 2) {
      const ModelParams p{.n = n, .g = g, .r = 2, .B = n / g, .P = 0.37, .A = 300, .lambda = 5};
      const auto rep = ssd_work(p);
      CHECK(rep.W_total == exhaustive_work(n, 300));
      CHECK(rep.omega == 1.0);
    }
}

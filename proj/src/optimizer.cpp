#include "ssdiv/optimizer.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ssdiv/parallel.hpp"
#include "ssdiv/recursive_engine.hpp"
#include "ssdiv/timing.hpp"

namespace ssdiv {

std::string_view to_string(Objective o) noexcept {
  switch (o) {
    case Objective::MinWork: return "MIN_WORK";
    case Objective::MinTimeSbr: return "MIN_TIME_SBR";
    case Objective::MinTimeMbr: return "MIN_TIME_MBR";
    case Objective::MinWallTime: return "MIN_WALL_TIME";
  }
  return "?";
}

Objective parse_objective(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (auto o : {Objective::MinWork, Objective::MinTimeSbr, Objective::MinTimeMbr,
                 Objective::MinWallTime})
    if (upper == to_string(o)) return o;
  throw InvalidParams("unknown objective '" + std::string(text) + "'");
}

std::string_view to_string(Engine e) noexcept { return e == Engine::Ask ? "ASK" : "RECURSIVE"; }

Engine parse_engine(std::string_view text) {
  if (text == "ask" || text == "ASK") return Engine::Ask;
  if (text == "rec" || text == "REC" || text == "recursive" || text == "RECURSIVE")
    return Engine::Recursive;
  throw InvalidParams("unknown engine '" + std::string(text) + "'");
}

std::vector<std::int64_t> default_candidates() {
  std::vector<std::int64_t> v;
  for (std::int64_t x = 2; x <= 1024; x *= 2) v.push_back(x);
  return v;
}

void SweepSpec::validate() const {
  for (const auto* set : {&g_set, &r_set, &B_set}) {
    if (set->empty()) throw InvalidParams("SweepSpec: candidate sets must be non-empty");
    for (auto v : *set)
      if (!is_power_of_two(v)) throw InvalidParams("SweepSpec: candidates must be powers of two");
  }
  // Check the non-swept fields with a trivially feasible triple.
  ModelParams probe = fixed;
  probe.g = 1;
  probe.B = 1;
  probe.r = 2;
  if (probe.n < 2) throw InvalidParams("SweepSpec: n must be >= 2");
  probe.validate();
}

namespace {

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<LandscapePoint> enumerate(const SweepSpec& spec) {
  std::vector<LandscapePoint> points;
  for (auto g : sorted_unique(spec.g_set))
    for (auto r : sorted_unique(spec.r_set))
      for (auto B : sorted_unique(spec.B_set)) points.push_back(LandscapePoint{g, r, B, {}, 0.0});
  return points;
}

SweepResult pick_best(std::vector<LandscapePoint> points) {
  const LandscapePoint* best = nullptr;
  for (const auto& p : points)
    if (p.feasible() && (best == nullptr || *p.value < *best->value)) best = &p;
  if (best == nullptr) throw NoFeasibleConfig("no feasible (g, r, B) triple in the sweep");
  SweepResult result;
  result.best = *best;
  result.landscape = std::move(points);
  return result;
}

double model_objective(const ModelParams& p, Objective objective) {
  switch (objective) {
    case Objective::MinWork: return ssd_work(p).W_total;
    case Objective::MinTimeSbr: return sbr_time(p);
    case Objective::MinTimeMbr: return mbr_time(p);
    case Objective::MinWallTime: break;
  }
  throw InvalidParams("MIN_WALL_TIME needs an empirical sweep");
}

}  // namespace

SweepResult grid_search_model(const SweepSpec& spec, int workers) {
  spec.validate();
  if (spec.objective == Objective::MinWallTime)
    throw InvalidParams("MIN_WALL_TIME needs an empirical sweep");

  auto points = enumerate(spec);
  const auto count = static_cast<std::int64_t>(points.size());
  const int nthreads = resolve_workers(workers);

#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) {
    auto& point = points[static_cast<std::size_t>(k)];
    if (!exact_tiling(spec.fixed.n, point.g, point.r, point.B)) continue;
    ModelParams p = spec.fixed;
    p.g = point.g;
    p.r = point.r;
    p.B = point.B;
    point.value = model_objective(p, spec.objective);
  }
  return pick_best(std::move(points));
}

SweepResult grid_search_empirical(const SweepSpec& spec, const EmpiricalSpec& run) {
  if (run.reps < 1) throw InvalidParams("grid_search_empirical: reps must be >= 1");
  for (const auto* set : {&spec.g_set, &spec.r_set, &spec.B_set})
    if (set->empty()) throw InvalidParams("SweepSpec: candidate sets must be non-empty");
  run.vp.validate();

  auto points = enumerate(spec);
  for (auto& point : points) {
    if (!exact_tiling(run.n, point.g, point.r, point.B)) continue;
    const AskConfig config{point.g, point.r, point.B, run.scheme, run.tile, run.workers};
    Timing t;
    if (run.engine == Engine::Ask)
      t = time_runs([&] { (void)ask_render(run.n, run.vp, run.d_max, config); }, run.reps);
    else
      t = time_runs([&] { (void)recursive_render(run.n, run.vp, run.d_max, config); }, run.reps);
    point.value = t.mean_ms;
    point.stderr_value = t.stderr_ms;
  }

  SweepResult result = pick_best(std::move(points));
  if (run.oracle_check) {
    const AskConfig config{result.best.g, result.best.r, result.best.B, run.scheme, run.tile,
                           run.workers};
    const DwellGrid oracle = exhaustive_render(run.n, run.vp, run.d_max, run.workers);
    const DwellGrid image = run.engine == Engine::Ask
                                ? ask_render(run.n, run.vp, run.d_max, config).grid
                                : recursive_render(run.n, run.vp, run.d_max, config).grid;
    result.best_mismatch_ppm = mismatch_ppm(image, oracle);
  }
  return result;
}

}  // namespace ssdiv

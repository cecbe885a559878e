#include "ssdiv/commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>

#include "ssdiv/cost_model.hpp"
#include "ssdiv/csv.hpp"
#include "ssdiv/monte_carlo.hpp"
#include "ssdiv/parallel.hpp"
#include "ssdiv/pgm.hpp"
#include "ssdiv/recursive_engine.hpp"
#include "ssdiv/timing.hpp"

namespace ssdiv::cli {

namespace {

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidParams("cannot parse number '" + std::string(text) + "'");
  return v;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidParams("cannot parse integer '" + std::string(text) + "'");
  return v;
}

// Output target: the given stream, or a file when `path` is non-empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const NoFeasibleConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

Viewport parse_viewport(std::string_view text) {
  double bounds[4];
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 3) != (comma != std::string_view::npos))
      throw InvalidParams("viewport needs re_min,re_max,im_min,im_max");
    bounds[k] = parse_double(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                                : comma - start));
    start = comma + 1;
  }
  const Viewport vp{bounds[0], bounds[1], bounds[2], bounds[3]};
  vp.validate();
  return vp;
}

// ---------------------------------------------------------------- model

int cmd_model(const ModelOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const bool optimizing = opt.optimize.has_value();
    const auto g_list = !opt.g.empty() ? opt.g : optimizing ? default_candidates() : std::vector<std::int64_t>{2};
    const auto r_list = !opt.r.empty() ? opt.r : optimizing ? default_candidates() : std::vector<std::int64_t>{2};
    const auto B_list = !opt.B.empty() ? opt.B : optimizing ? default_candidates() : std::vector<std::int64_t>{32};

    std::vector<ModelParams> points;
    for (auto n : opt.n)
      for (auto P : opt.P)
        for (auto A : opt.A)
          for (auto lambda : opt.lambda)
            for (auto q : opt.q)
              for (auto c : opt.c) {
                ModelParams base{n, 1, 2, 1, P, A, lambda, q, c};
                if (optimizing) {
                  SweepSpec spec{g_list, r_list, B_list, *opt.optimize, base};
                  const auto best = grid_search_model(spec, opt.workers).best;
                  base.g = best.g;
                  base.r = best.r;
                  base.B = best.B;
                  points.push_back(base);
                  continue;
                }
                for (auto g : g_list)
                  for (auto r : r_list)
                    for (auto B : B_list) {
                      ModelParams p = base;
                      p.g = g;
                      p.r = r;
                      p.B = B;
                      if (exact_tiling(p.n, g, r, B)) {
                        p.validate();
                        points.push_back(p);
                      } else {
                        err << "skipping infeasible n=" << n << " g=" << g << " r=" << r
                            << " B=" << B << '\n';
                      }
                    }
              }
    if (points.empty()) throw InvalidParams("no feasible model point");

    Sink sink(opt.out, out);
    csv::Writer w(sink.get());
    if (opt.trials > 0)
      w.header({"n", "g", "r", "B", "P", "A", "lambda", "q", "c", "W_E", "W_SSD", "Omega", "T_Ex",
                "T_SBR", "T_MBR", "S_SBR", "S_MBR", "W_MC", "W_MC_stderr"});
    else
      w.header({"n", "g", "r", "B", "P", "A", "lambda", "q", "c", "W_E", "W_SSD", "Omega", "T_Ex",
                "T_SBR", "T_MBR", "S_SBR", "S_MBR"});
    for (const auto& p : points) {
      const CostReport rep = evaluate(p);
      w.field(p.n).field(p.g).field(p.r).field(p.B).field(p.P).field(p.A).field(p.lambda);
      w.field(p.q).field(p.c).field(rep.W_E).field(rep.W_total).field(rep.omega);
      w.field(rep.T_ex).field(rep.T_sbr).field(rep.T_mbr).field(rep.S_sbr).field(rep.S_mbr);
      if (opt.trials > 0) {
        const auto mc = simulate_subdivision_work(p, opt.trials, opt.seed, opt.workers);
        w.field(mc.mean).field(mc.stderr_mean);
      }
      w.end_row();
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------- render

std::string_view to_string(Approach a) noexcept {
  switch (a) {
    case Approach::EX: return "EX";
    case Approach::ASK_SBR: return "ASK_SBR";
    case Approach::ASK_MBR: return "ASK_MBR";
    case Approach::REC_SBR: return "REC_SBR";
    case Approach::REC_MBR: return "REC_MBR";
  }
  return "?";
}

Approach parse_approach(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (auto a : {Approach::EX, Approach::ASK_SBR, Approach::ASK_MBR, Approach::REC_SBR,
                 Approach::REC_MBR})
    if (upper == to_string(a)) return a;
  throw InvalidParams("unknown approach '" + std::string(text) + "'");
}

namespace {

void write_level_stats(std::ostream& out, const std::vector<LevelStats>& levels) {
  csv::Writer w(out);
  w.header({"level", "regions_in", "filled", "subdivided", "leaf_processed", "q_pixels",
            "t_pixels", "a_pixels"});
  for (const auto& s : levels) {
    w.field(s.level).field(s.regions_in).field(s.filled).field(s.subdivided);
    w.field(s.leaf_processed).field(s.q_pixels).field(s.t_pixels).field(s.a_pixels);
    w.end_row();
  }
}

}  // namespace

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opt.vp.validate();
    if (opt.n < 1) throw InvalidParams("n must be >= 1");
    if (opt.dwell < 1) throw InvalidParams("dwell must be >= 1");
    const AskConfig config{opt.g, opt.r, opt.B, opt.scheme, opt.tile, opt.workers};

    DwellGrid grid;
    std::vector<LevelStats> levels;
    if (opt.approach == "ex") {
      grid = exhaustive_render(opt.n, opt.vp, opt.dwell, opt.workers);
    } else if (opt.approach == "ask") {
      auto result = ask_render(opt.n, opt.vp, opt.dwell, config);
      grid = std::move(result.grid);
      levels = std::move(result.levels);
    } else if (opt.approach == "rec") {
      auto result = recursive_render(opt.n, opt.vp, opt.dwell, config);
      grid = std::move(result.grid);
      levels = std::move(result.stats.levels);
    } else {
      throw InvalidParams("unknown approach '" + opt.approach + "' (ex, ask, rec)");
    }

    pgm::write_file(opt.out, pgm::quantize(grid));
    if (!opt.stats.empty()) {
      Sink sink(opt.stats, out);
      write_level_stats(sink.get(), levels);
    }
    out << "wrote " << opt.out << " (" << opt.n << "x" << opt.n << ")\n";
    return kExitOk;
  });
}

// ---------------------------------------------------------------- bench

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  csv::Writer w(out);
  w.header({"approach", "n", "g", "r", "B", "tile", "workers", "mean_ms", "stderr_ms", "reps",
            "mismatch_ppm"});
  for (const auto& row : rows) {
    w.field(to_string(row.approach)).field(row.n).field(row.g).field(row.r).field(row.B);
    w.field(row.tile).field(row.workers).field(row.mean_ms).field(row.stderr_ms);
    w.field(row.reps).field(row.mismatch_ppm);
    w.end_row();
  }
}

LandscapePoint best_from_landscape(const std::string& path) {
  const csv::Table table = csv::read_file(path);
  const auto cg = table.column("g");
  const auto cr = table.column("r");
  const auto cb = table.column("B");
  const auto cf = table.column("feasible");
  const auto cv = table.column("value");
  std::optional<LandscapePoint> best;
  for (const auto& row : table.rows) {
    if (row[cf] != "1") continue;
    LandscapePoint p{parse_int(row[cg]), parse_int(row[cr]), parse_int(row[cb]),
                     parse_double(row[cv]), 0.0};
    if (!best || *p.value < *best->value) best = p;
  }
  if (!best) throw NoFeasibleConfig("landscape '" + path + "' has no feasible row");
  return *best;
}

std::vector<BenchRecord> run_bench(const BenchOptions& opt, std::ostream& err) {
  if (opt.reps < 1) throw InvalidParams("reps must be >= 1");
  opt.vp.validate();
  std::vector<Approach> approaches;
  for (const auto& a : opt.approaches) approaches.push_back(parse_approach(a));

  std::int64_t g = opt.g, r = opt.r, B = opt.B;
  if (!opt.optimal.empty()) {
    const auto best = best_from_landscape(opt.optimal);
    g = best.g;
    r = best.r;
    B = best.B;
  }
  const int workers = resolve_workers(opt.workers);

  std::vector<BenchRecord> rows;
  for (auto n : opt.n) {
    const DwellGrid oracle = exhaustive_render(n, opt.vp, opt.dwell, workers);
    for (auto approach : approaches) {
      BenchRecord rec;
      rec.approach = approach;
      rec.n = n;
      rec.workers = workers;
      rec.reps = opt.reps;
      Timing t;
      if (approach == Approach::EX) {
        DwellGrid image;
        t = time_runs([&] { image = exhaustive_render(n, opt.vp, opt.dwell, workers); }, opt.reps);
        rec.mismatch_ppm = mismatch_ppm(image, oracle);
      } else {
        const bool mbr = approach == Approach::ASK_MBR || approach == Approach::REC_MBR;
        const bool ask = approach == Approach::ASK_SBR || approach == Approach::ASK_MBR;
        const AskConfig config{g, r, B, mbr ? Scheme::MBR : Scheme::SBR, opt.tile, workers};
        if (!exact_tiling(n, g, r, B)) {
          err << "skipping " << to_string(approach) << " at n=" << n << ": g=" << g << " r=" << r
              << " B=" << B << " does not tile the domain\n";
          continue;
        }
        rec.g = g;
        rec.r = r;
        rec.B = B;
        rec.tile = mbr ? opt.tile : 0;
        DwellGrid image;
        if (ask)
          t = time_runs([&] { image = ask_render(n, opt.vp, opt.dwell, config).grid; }, opt.reps);
        else
          t = time_runs([&] { image = recursive_render(n, opt.vp, opt.dwell, config).grid; },
                        opt.reps);
        rec.mismatch_ppm = mismatch_ppm(image, oracle);
      }
      rec.mean_ms = t.mean_ms;
      rec.stderr_ms = t.stderr_ms;
      rows.push_back(rec);
    }
  }
  return rows;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!opt.optimal.empty() && !std::ifstream(opt.optimal))
      throw InvalidParams("landscape file '" + opt.optimal + "' not found");
    const auto rows = run_bench(opt, err);
    Sink sink(opt.out, out);
    write_bench_csv(sink.get(), rows);
    bool accepted = true;
    for (const auto& row : rows) accepted = accepted && row.mismatch_ppm <= 1000.0;
    if (!accepted) err << "warning: some rows exceed the 1000 ppm mismatch gate\n";
    return accepted ? kExitOk : kExitFailure;
  });
}

// ---------------------------------------------------------------- optimize

void write_landscape_csv(std::ostream& out, const std::vector<LandscapePoint>& points) {
  csv::Writer w(out);
  w.header({"g", "r", "B", "feasible", "value"});
  for (const auto& p : points) {
    w.field(p.g).field(p.r).field(p.B).field(p.feasible() ? 1 : 0);
    if (p.feasible())
      w.field(*p.value);
    else
      w.field(std::string_view{});
    w.end_row();
  }
}

int cmd_optimize(const OptimizeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepSpec spec;
    spec.g_set = opt.g_set;
    spec.r_set = opt.r_set;
    spec.B_set = opt.B_set;

    SweepResult result;
    if (opt.engine == "model") {
      spec.objective = opt.objective.value_or(opt.scheme == Scheme::SBR ? Objective::MinTimeSbr
                                                                        : Objective::MinTimeMbr);
      spec.fixed = ModelParams{opt.n, 1, 2, 1, opt.P, opt.A, opt.lambda, opt.q, opt.c};
      result = grid_search_model(spec, opt.workers);
    } else {
      spec.objective = opt.objective.value_or(Objective::MinWallTime);
      if (spec.objective != Objective::MinWallTime)
        throw InvalidParams("empirical sweeps only support MIN_WALL_TIME");
      EmpiricalSpec run;
      run.engine = parse_engine(opt.engine);
      run.scheme = opt.scheme;
      run.n = opt.n;
      run.vp = opt.vp;
      run.d_max = opt.dwell;
      run.reps = opt.reps;
      run.tile = opt.tile;
      run.workers = opt.workers;
      result = grid_search_empirical(spec, run);
    }

    if (!opt.out.empty()) {
      Sink sink(opt.out, out);
      write_landscape_csv(sink.get(), result.landscape);
    }
    out << "best g=" << result.best.g << " r=" << result.best.r << " B=" << result.best.B
        << " value=" << csv::format_double(*result.best.value);
    if (result.best_mismatch_ppm)
      out << " mismatch_ppm=" << csv::format_double(*result.best_mismatch_ppm);
    out << '\n';
    return kExitOk;
  });
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& file_a, const std::string& file_b, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const auto a = pgm::read_file(file_a);
    const auto b = pgm::read_file(file_b);
    const auto cmp = pgm::compare(a, b);
    out << "total_pixels=" << cmp.total_pixels << " mismatched=" << cmp.mismatched
        << " mismatch_ppm=" << csv::format_double(cmp.mismatch_ppm) << '\n';
    return cmp.mismatch_ppm <= 1000.0 ? kExitOk : kExitFailure;
  });
}

}  // namespace ssdiv::cli

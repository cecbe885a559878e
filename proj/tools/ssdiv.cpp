#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssdiv/commands.hpp"
#include "ssdiv/parallel.hpp"

using namespace ssdiv;

int main(int argc, char** argv) {
  CLI::App app{"Subdivision cost model and Mariani-Silver renderers"};
  app.require_subcommand(1);

  std::string viewport_text = "-1.5,0.5,-1,1";
  std::string scheme_text = "SBR";
  std::string objective_text;
  std::uint64_t seed = 1;

  // model
  cli::ModelOptions model;
  auto* model_cmd = app.add_subcommand("model", "Evaluate the analytic cost model, one CSV row per point");
  model_cmd->add_option("--n", model.n, "Domain side(s)")->delimiter(',');
  model_cmd->add_option("--g", model.g, "Initial subdivision(s)")->delimiter(',');
  model_cmd->add_option("--r", model.r, "Recurrent subdivision(s)")->delimiter(',');
  model_cmd->add_option("--B", model.B, "Stopping side(s)")->delimiter(',');
  model_cmd->add_option("--P", model.P, "Subdivision probability(ies)")->delimiter(',');
  model_cmd->add_option("--A", model.A, "Work per element")->delimiter(',');
  model_cmd->add_option("--lambda", model.lambda, "Subdivision cost multiplier")->delimiter(',');
  model_cmd->add_option("--q", model.q, "Multiprocessors")->delimiter(',');
  model_cmd->add_option("--c", model.c, "Cores per multiprocessor")->delimiter(',');
  model_cmd->add_option("--optimize", objective_text,
                        "Replace g/r/B by the optimum for MIN_WORK, MIN_TIME_SBR or MIN_TIME_MBR");
  model_cmd->add_option("--trials", model.trials, "Append a Monte-Carlo estimate with this many trials");
  model_cmd->add_option("--seed", seed, "Monte-Carlo seed");
  model_cmd->add_option("--workers", model.workers, "Worker threads");
  model_cmd->add_option("--out", model.out, "Output CSV (default: stdout)");

  // render
  cli::RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Render the Mandelbrot set to a PGM");
  render_cmd->add_option("--approach", render.approach, "ex, ask or rec")
      ->check(CLI::IsMember({"ex", "ask", "rec"}));
  render_cmd->add_option("--n", render.n, "Image side");
  render_cmd->add_option("--viewport", viewport_text, "re_min,re_max,im_min,im_max");
  render_cmd->add_option("--dwell", render.dwell, "Dwell limit");
  render_cmd->add_option("--g", render.g);
  render_cmd->add_option("--r", render.r);
  render_cmd->add_option("--B", render.B);
  render_cmd->add_option("--scheme", scheme_text, "SBR or MBR");
  render_cmd->add_option("--tile", render.tile, "MBR tile side");
  render_cmd->add_option("--workers", render.workers);
  render_cmd->add_option("--seed", seed, "Unused; accepted for flag uniformity");
  render_cmd->add_option("--out", render.out, "PGM path");
  render_cmd->add_option("--stats", render.stats, "Per-level stats CSV path");

  // bench
  cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time approaches against the exhaustive oracle");
  bench_cmd->add_option("--approaches", bench.approaches, "EX,ASK_SBR,ASK_MBR,REC_SBR,REC_MBR")
      ->delimiter(',');
  bench_cmd->add_option("--n", bench.n)->delimiter(',');
  bench_cmd->add_option("--viewport", viewport_text);
  bench_cmd->add_option("--dwell", bench.dwell);
  bench_cmd->add_option("--g", bench.g);
  bench_cmd->add_option("--r", bench.r);
  bench_cmd->add_option("--B", bench.B);
  bench_cmd->add_option("--optimal", bench.optimal, "Landscape CSV to take g/r/B from");
  bench_cmd->add_option("--tile", bench.tile);
  bench_cmd->add_option("--workers", bench.workers);
  bench_cmd->add_option("--reps", bench.reps);
  bench_cmd->add_option("--seed", seed, "Unused; accepted for flag uniformity");
  bench_cmd->add_option("--out", bench.out, "Output CSV (default: stdout)");

  // optimize
  cli::OptimizeOptions optimize;
  auto* optimize_cmd = app.add_subcommand("optimize", "Sweep {g,r,B} and write the landscape");
  optimize_cmd->add_option("--engine", optimize.engine, "model, ask or rec")
      ->check(CLI::IsMember({"model", "ask", "rec"}));
  optimize_cmd->add_option("--scheme", scheme_text);
  optimize_cmd->add_option("--objective", objective_text,
                           "MIN_WORK, MIN_TIME_SBR, MIN_TIME_MBR or MIN_WALL_TIME");
  optimize_cmd->add_option("--g-set", optimize.g_set)->delimiter(',');
  optimize_cmd->add_option("--r-set", optimize.r_set)->delimiter(',');
  optimize_cmd->add_option("--B-set", optimize.B_set)->delimiter(',');
  optimize_cmd->add_option("--n", optimize.n);
  optimize_cmd->add_option("--P", optimize.P);
  optimize_cmd->add_option("--A", optimize.A);
  optimize_cmd->add_option("--lambda", optimize.lambda);
  optimize_cmd->add_option("--q", optimize.q);
  optimize_cmd->add_option("--c", optimize.c);
  optimize_cmd->add_option("--viewport", viewport_text);
  optimize_cmd->add_option("--dwell", optimize.dwell);
  optimize_cmd->add_option("--tile", optimize.tile);
  optimize_cmd->add_option("--reps", optimize.reps);
  optimize_cmd->add_option("--workers", optimize.workers);
  optimize_cmd->add_option("--seed", seed, "Unused; accepted for flag uniformity");
  optimize_cmd->add_option("--out", optimize.out, "Landscape CSV path");

  // verify
  std::string file_a, file_b;
  auto* verify_cmd = app.add_subcommand("verify", "Compare two PGM images");
  verify_cmd->add_option("file_a", file_a)->required();
  verify_cmd->add_option("file_b", file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (*model_cmd) {
      if (!objective_text.empty()) model.optimize = parse_objective(objective_text);
      model.seed = seed;
      return cli::cmd_model(model, std::cout, std::cerr);
    }
    if (*render_cmd) {
      render.vp = cli::parse_viewport(viewport_text);
      render.scheme = parse_scheme(scheme_text);
      return cli::cmd_render(render, std::cout, std::cerr);
    }
    if (*bench_cmd) {
      bench.vp = cli::parse_viewport(viewport_text);
      return cli::cmd_bench(bench, std::cout, std::cerr);
    }
    if (*optimize_cmd) {
      optimize.vp = cli::parse_viewport(viewport_text);
      optimize.scheme = parse_scheme(scheme_text);
      if (!objective_text.empty()) optimize.objective = parse_objective(objective_text);
      return cli::cmd_optimize(optimize, std::cout, std::cerr);
    }
    if (*verify_cmd) return cli::cmd_verify(file_a, file_b, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}

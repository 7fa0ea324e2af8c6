// Command-line front end: seed sensor placements, run descents, reproduce the
// full experiment tables, and run the analytical self-checks.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cover/coverage.hpp"
#include "cover/errors.hpp"
#include "cover/experiment.hpp"
#include "cover/plot.hpp"
#include "cover/sampling.hpp"
#include "cover/scenario.hpp"
#include "cover/wkmeans.hpp"

namespace {

struct CommonOpts {
  std::string scenario_path;
  std::string preset;
  std::optional<int> k;
  std::optional<double> epsilon;
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  std::optional<double> gain;
  std::optional<double> dt;
  std::optional<double> threshold;
  std::optional<int> max_iterations;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--scenario", opts->scenario_path,
                  "Scenario JSON file (default: built-in reference scenario)");
  cmd->add_option("--preset", opts->preset,
                  "Named built-in scenario; the only preset is 'reference'")
      ->check(CLI::IsMember({"reference"}))
      ->excludes("--scenario");
  cmd->add_option("--k", opts->k, "Number of sensors");
  cmd->add_option("--epsilon", opts->epsilon, "Grid pitch");
  cmd->add_option("--runs", opts->runs, "Runs per method");
  cmd->add_option("--seed", opts->seed, "Master seed");
  cmd->add_option("--gain", opts->gain, "Proportional gain K");
  cmd->add_option("--dt", opts->dt, "Integration step");
  cmd->add_option("--threshold", opts->threshold,
                  "Convergence threshold on the mean L1 step");
  cmd->add_option("--max-iterations", opts->max_iterations,
                  "Iteration cap per descent");
}

cover::Scenario resolve_scenario(const CommonOpts& opts) {
  cover::Scenario s = opts.scenario_path.empty()
                          ? cover::reference_scenario()
                          : cover::load_scenario(opts.scenario_path);
  if (opts.k) s.k = *opts.k;
  if (opts.epsilon) s.epsilon = *opts.epsilon;
  if (opts.runs) s.runs = *opts.runs;
  if (opts.seed) s.master_seed = *opts.seed;
  if (opts.gain) s.descent.gain = *opts.gain;
  if (opts.dt) s.descent.dt = *opts.dt;
  if (opts.threshold) s.descent.convergence_threshold = *opts.threshold;
  if (opts.max_iterations) s.descent.max_iterations = *opts.max_iterations;
  return s;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void print_summary(const cover::ScenarioSummary& summary) {
  std::printf("%-12s %5s %-22s %-22s %-22s\n", "method", "runs", "initial_H",
              "final_H", "distance/sensor");
  for (const cover::MethodSummary& m : summary.methods) {
    std::printf("%-12s %5d %-22s %-22s %-22s\n",
                std::string(cover::to_string(m.method)).c_str(), m.runs,
                (fmt(m.initial_mean) + " +- " + fmt(m.initial_sd)).c_str(),
                (fmt(m.final_mean) + " +- " + fmt(m.final_sd)).c_str(),
                (fmt(m.distance_mean) + " +- " + fmt(m.distance_sd)).c_str());
  }
  if (std::isfinite(summary.initial_improvement_pct)) {
    std::printf("improvement: initial_H %.1f%%, distance %.1f%%\n",
                summary.initial_improvement_pct,
                summary.distance_improvement_pct);
  }
}

int cmd_sample(const CommonOpts& opts, const std::string& method_name,
               int run_id, const std::string& out_path) {
  const cover::Scenario scenario = resolve_scenario(opts);
  const cover::Method method = cover::method_from_string(method_name);
  const cover::PreparedScenario prepared = cover::prepare_scenario(scenario);

  cover::RngStream rng(scenario.master_seed,
                       2 * static_cast<std::uint64_t>(run_id) +
                           (method == cover::Method::uniform ? 1 : 0));
  const cover::SensorConfiguration config =
      method == cover::Method::weighted_d2
          ? cover::weighted_d2_sample(prepared.cells, scenario.k, rng)
          : cover::uniform_sample(scenario.domain, scenario.k, rng);

  std::string csv = "sensor,x,y\n";
  for (std::size_t i = 0; i < config.size(); ++i) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g\n", i, config[i].x,
                  config[i].y);
    csv += buf;
  }
  std::fputs(csv.c_str(), stdout);
  const double H =
      cover::coverage_cost(config, prepared.field, scenario.domain);
  std::fprintf(stderr, "initial coverage: %.12g\n", H);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw cover::IoError("cannot open for writing: " + out_path);
    }
    out << csv;
  }
  return 0;
}

int cmd_descend(const CommonOpts& opts, const std::string& method_name,
                int run_id, const std::string& out_dir, bool plots,
                std::string prefix) {
  const cover::Scenario scenario = resolve_scenario(opts);
  const cover::Method method = cover::method_from_string(method_name);
  const cover::PreparedScenario prepared = cover::prepare_scenario(scenario);

  cover::DescentTrace trace;
  const cover::TrialRecord rec =
      cover::run_trial(prepared, method, run_id, &trace);

  std::printf("method:        %s\n", std::string(cover::to_string(method)).c_str());
  std::printf("run:           %d\n", rec.run_id);
  std::printf("seed:          %llu\n",
              static_cast<unsigned long long>(rec.seed));
  std::printf("initial H:     %.12g\n", rec.initial_H);
  std::printf("final H:       %.12g\n", rec.final_H);
  std::printf("iterations:    %d\n", rec.iterations);
  std::printf("converged:     %s\n", rec.converged ? "yes" : "no");
  std::printf("mean distance: %.12g\n", rec.mean_distance);

  if (plots) {
    if (prefix.empty()) {
      prefix = "descend_" + std::string(cover::to_string(method)) + "_" +
               std::to_string(run_id);
    }
    const cover::PlotFiles files =
        cover::emit_plots(trace, prepared.field, scenario.domain, out_dir,
                          prefix);
    for (const std::string& f : files.files) {
      std::printf("wrote %s\n", f.c_str());
    }
  }
  return 0;
}

int cmd_experiment(const CommonOpts& opts, const std::string& out_dir,
                   bool plots, unsigned workers) {
  const cover::Scenario scenario = resolve_scenario(opts);
  const cover::ScenarioResult result = cover::run_scenario(scenario, workers);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw cover::IoError("cannot create directory: " + out_dir);
  }
  cover::write_trials_csv(out_dir + "/trials.csv", result.trials);
  cover::write_summary_csv(out_dir + "/summary.csv", result.summary);
  print_summary(result.summary);
  std::printf("wrote %s/trials.csv\n", out_dir.c_str());
  std::printf("wrote %s/summary.csv\n", out_dir.c_str());

  if (plots) {
    const cover::PreparedScenario prepared = cover::prepare_scenario(scenario);
    for (cover::Method method : scenario.methods) {
      cover::DescentTrace trace;
      cover::run_trial(prepared, method, 0, &trace);
      const cover::PlotFiles files = cover::emit_plots(
          trace, prepared.field, scenario.domain, out_dir,
          std::string(cover::to_string(method)) + "_run0");
      for (const std::string& f : files.files) {
        std::printf("wrote %s\n", f.c_str());
      }
    }
  }
  return 0;
}

int cmd_check(std::uint64_t seed, int trials, int instances, int configs) {
  int failures = 0;
  const auto verdict = [&](bool ok) {
    if (!ok) {
      ++failures;
    }
    return ok ? "ok" : "FAIL";
  };

  // Sandwich inequality on random placements of the reference scenario.
  const cover::Scenario base = cover::reference_scenario();
  const cover::DensityField field =
      cover::normalize(base.density, base.domain);
  for (const double eps : {0.1, 0.05}) {
    const cover::CellPartition cells =
        cover::build_cells(base.domain, eps, field);
    int ok_count = 0;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    cover::RngStream rng(seed, 900 + static_cast<std::uint64_t>(eps * 1000));
    for (int c = 0; c < configs; ++c) {
      const cover::SensorConfiguration sensors =
          cover::uniform_sample(base.domain, base.k, rng);
      const cover::SandwichReport r =
          cover::sandwich_check(sensors, field, base.domain, cells);
      ok_count += r.ok() ? 1 : 0;
      worst_lhs = std::min(worst_lhs, r.lhs_margin);
      worst_rhs = std::min(worst_rhs, r.rhs_margin);
    }
    const bool ok = ok_count == configs;
    std::printf(
        "[%s] sandwich bound, epsilon=%.2f: %d/%d configurations "
        "(worst margins %.3g / %.3g)\n",
        verdict(ok), eps, ok_count, configs, worst_lhs, worst_rhs);
  }

  // Exact seeding expectation identity, one random center.
  {
    cover::RngStream rng(seed, 1000);
    int ok_count = 0;
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
      const cover::WeightedPointSet set =
          cover::random_weighted_instance(rng, 2, 10);
      const cover::Lemma1Report r = cover::lemma1_check(set);
      ok_count += r.ok ? 1 : 0;
      worst = std::max(worst,
                       std::abs(r.exact_expectation - 2.0 * r.opt_cost));
    }
    const bool ok = ok_count == instances;
    std::printf(
        "[%s] exact 1-center seeding expectation = 2x optimum: %d/%d "
        "instances (worst deviation %.3g)\n",
        verdict(ok), ok_count, instances, worst);
  }

  // Exact conditional expectation bound for one added center.
  {
    cover::RngStream rng(seed, 2000);
    int ok_count = 0;
    for (int i = 0; i < instances; ++i) {
      const cover::WeightedPointSet set =
          cover::random_weighted_instance(rng, 4, 12);
      const std::vector<cover::Vec2> existing{
          {rng.next_double() * 4.0 - 2.0, rng.next_double() * 4.0 - 2.0}};
      const double expectation =
          cover::lemma2_exact_expectation(set, existing);
      const double opt = cover::brute_force_opt(set, 1).cost;
      ok_count += expectation <= 8.0 * opt + 1e-10 ? 1 : 0;
    }
    const bool ok = ok_count == instances;
    std::printf(
        "[%s] exact added-center expectation <= 8x optimum: %d/%d instances\n",
        verdict(ok), ok_count, instances);
  }

  // Monte Carlo seeding bound against the brute-force optimum.
  {
    cover::RngStream rng(seed, 3000);
    int ok_count = 0;
    double worst_ratio = 0.0;
    double bound = 0.0;
    for (int i = 0; i < instances; ++i) {
      const cover::WeightedPointSet set =
          cover::random_weighted_instance(rng, 6, 12);
      const int k = 2 + static_cast<int>(rng.next_double() * 2.0);
      const cover::BoundCheckReport r =
          cover::theorem_bound_check(set, k, trials, rng);
      ok_count += r.ok ? 1 : 0;
      if (std::isfinite(r.ratio)) {
        worst_ratio = std::max(worst_ratio, r.ratio);
      }
      bound = r.factor;
    }
    const bool ok = ok_count == instances;
    std::printf(
        "[%s] mean seeded cost <= 8(ln k + 2) x optimum: %d/%d instances "
        "(worst ratio %.3g, bound ~%.3g)\n",
        verdict(ok), ok_count, instances, worst_ratio, bound);
  }

  std::printf("%s\n", failures == 0 ? "all checks passed" : "CHECKS FAILED");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sensor coverage toolkit: density-weighted seeding, Lloyd "
               "descent, and verification checks"};
  app.require_subcommand(1);

  CommonOpts sample_opts;
  std::string sample_method = "weighted_d2";
  int sample_run = 0;
  std::string sample_out;
  CLI::App* sample = app.add_subcommand(
      "sample", "Draw one initial placement and print it as CSV");
  add_common(sample, &sample_opts);
  sample->add_option("--method", sample_method, "weighted_d2 or uniform");
  sample->add_option("--run", sample_run, "Run id (stream selector)");
  sample->add_option("--out", sample_out, "Also write the CSV to this file");

  CommonOpts descend_opts;
  std::string descend_method = "weighted_d2";
  int descend_run = 0;
  std::string descend_out = ".";
  std::string descend_prefix;
  bool descend_plots = false;
  CLI::App* descend = app.add_subcommand(
      "descend", "Run one seeded descent and report the outcome");
  add_common(descend, &descend_opts);
  descend->add_option("--method", descend_method, "weighted_d2 or uniform");
  descend->add_option("--run", descend_run, "Run id (stream selector)");
  descend->add_option("--out", descend_out, "Output directory for plots");
  descend->add_option("--prefix", descend_prefix, "Plot filename prefix");
  descend->add_flag("--plots", descend_plots,
                    "Emit SVG plots and CSV twins of the descent");

  CommonOpts exp_opts;
  std::string exp_out = ".";
  bool exp_plots = false;
  unsigned exp_workers = 0;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run all (method, run) trials and write CSV tables");
  add_common(experiment, &exp_opts);
  experiment->add_option("--out", exp_out, "Output directory");
  experiment->add_flag("--plots", exp_plots,
                       "Also plot run 0 of each method");
  experiment->add_option("--workers", exp_workers,
                         "Thread count (0 = hardware)");

  std::uint64_t check_seed = 0;
  int check_trials = 10000;
  int check_instances = 100;
  int check_configs = 20;
  CLI::App* check = app.add_subcommand(
      "check", "Run the analytical self-checks (exit 1 on any failure)");
  check->add_option("--seed", check_seed, "Master seed");
  check->add_option("--trials", check_trials,
                    "Monte Carlo trials per instance");
  check->add_option("--instances", check_instances,
                    "Random instances per check");
  check->add_option("--configs", check_configs,
                    "Random configurations per grid pitch");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) {
      return cmd_sample(sample_opts, sample_method, sample_run, sample_out);
    }
    if (descend->parsed()) {
      return cmd_descend(descend_opts, descend_method, descend_run,
                         descend_out, descend_plots, descend_prefix);
    }
    if (experiment->parsed()) {
      return cmd_experiment(exp_opts, exp_out, exp_plots, exp_workers);
    }
    if (check->parsed()) {
      return cmd_check(check_seed, check_trials, check_instances,
                       check_configs);
    }
  } catch (const cover::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

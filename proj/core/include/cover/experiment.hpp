#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cover/grid.hpp"
#include "cover/lloyd.hpp"
#include "cover/scenario.hpp"

namespace cover {

struct TrialRecord {
  int run_id = 0;
  Method method = Method::weighted_d2;
  int k = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;  // derived stream seed of the trial
  double initial_H = 0.0;
  double final_H = 0.0;
  int iterations = 0;
  bool converged = false;
  double mean_distance = 0.0;
};

// Scenario with its derived, shareable state: the normalized field and the
// grid cells every trial samples from. Build once, run many trials.
struct PreparedScenario {
  Scenario scenario;
  DensityField field;  // normalized over the domain
  CellPartition cells;
};

PreparedScenario prepare_scenario(const Scenario& scenario);

// Runs one seeded placement plus full descent. The random stream index is
// 2*run_id + (0 for weighted_d2, 1 for uniform), so every trial is
// reproducible in isolation and methods never share draws. Pass `trace` to
// keep the full trajectory (it is discarded otherwise).
TrialRecord run_trial(const PreparedScenario& prepared, Method method,
                      int run_id, DescentTrace* trace = nullptr);

// Convenience overload that prepares the scenario first.
TrialRecord run_trial(const Scenario& scenario, Method method, int run_id);

struct MethodSummary {
  Method method = Method::weighted_d2;
  int runs = 0;
  double initial_mean = 0.0;
  double initial_sd = 0.0;
  double final_mean = 0.0;
  double final_sd = 0.0;
  double distance_mean = 0.0;
  double distance_sd = 0.0;
  double iterations_mean = 0.0;
  double converged_fraction = 0.0;
};

struct ScenarioSummary {
  std::vector<MethodSummary> methods;
  // Percent reduction achieved by weighted_d2 relative to uniform; NaN when
  // either method is absent.
  double initial_improvement_pct = 0.0;
  double distance_improvement_pct = 0.0;
};

struct ScenarioResult {
  std::vector<TrialRecord> trials;
  ScenarioSummary summary;
};

// Runs every (method, run_id) pair of the scenario on a small thread pool
// (workers = 0 picks the hardware count). Trials are method-major in the
// method order of the scenario, run_id ascending; the output is identical
// for any worker count.
ScenarioResult run_scenario(const Scenario& scenario, unsigned workers = 0);

ScenarioSummary summarize(const std::vector<TrialRecord>& trials);

// CSV with header
//   run_id,method,k,epsilon,seed,initial_H,final_H,iterations,converged,
//   mean_distance
// and one row per trial; doubles are printed with %.12g, converged as 0/1.
std::string trials_to_csv(const std::vector<TrialRecord>& trials);
std::string summary_to_csv(const ScenarioSummary& summary);

// Write either CSV to a file; IoError when the file cannot be written.
void write_trials_csv(const std::string& path,
                      const std::vector<TrialRecord>& trials);
void write_summary_csv(const std::string& path,
                       const ScenarioSummary& summary);

}  // namespace cover

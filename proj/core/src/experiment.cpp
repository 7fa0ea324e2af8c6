#include "cover/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include "cover/errors.hpp"
#include "cover/rng.hpp"
#include "cover/sampling.hpp"

namespace cover {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Stats {
  double mean = 0.0;
  double sd = 0.0;
};

Stats mean_sd(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) {
    return s;
  }
  for (double x : xs) {
    s.mean += x;
  }
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double acc = 0.0;
    for (double x : xs) {
      acc += (x - s.mean) * (x - s.mean);
    }
    s.sd = std::sqrt(acc / static_cast<double>(xs.size() - 1));
  }
  return s;
}

std::uint64_t trial_stream(Method method, int run_id) {
  return 2 * static_cast<std::uint64_t>(run_id) +
         (method == Method::uniform ? 1 : 0);
}

}  // namespace

PreparedScenario prepare_scenario(const Scenario& scenario) {
  PreparedScenario p;
  p.scenario = scenario;
  p.field = normalize(scenario.density, scenario.domain);
  p.cells = build_cells(scenario.domain, scenario.epsilon, p.field);
  return p;
}

TrialRecord run_trial(const PreparedScenario& prepared, Method method,
                      int run_id, DescentTrace* trace) {
  const Scenario& sc = prepared.scenario;
  RngStream rng(sc.master_seed, trial_stream(method, run_id));

  SensorConfiguration start =
      method == Method::weighted_d2
          ? weighted_d2_sample(prepared.cells, sc.k, rng)
          : uniform_sample(sc.domain, sc.k, rng);
  DescentTrace t = run_descent(start, prepared.field, sc.domain, sc.descent);

  TrialRecord rec;
  rec.run_id = run_id;
  rec.method = method;
  rec.k = sc.k;
  rec.epsilon = sc.epsilon;
  rec.seed = rng.derived_seed();
  rec.initial_H = t.initial_coverage();
  rec.final_H = t.final_coverage();
  rec.iterations = t.iterations;
  rec.converged = t.converged;
  rec.mean_distance = t.mean_distance();
  if (trace != nullptr) {
    *trace = std::move(t);
  }
  return rec;
}

TrialRecord run_trial(const Scenario& scenario, Method method, int run_id) {
  return run_trial(prepare_scenario(scenario), method, run_id);
}

ScenarioResult run_scenario(const Scenario& scenario, unsigned workers) {
  const PreparedScenario prepared = prepare_scenario(scenario);
  const std::size_t total =
      scenario.methods.size() * static_cast<std::size_t>(scenario.runs);

  ScenarioResult result;
  result.trials.resize(total);
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, total));

  // Tasks only write their own slot; prepared state is read-only. The record
  // layout is fixed up front, so any interleaving yields the same output.
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) {
        return;
      }
      const std::size_t m = idx / static_cast<std::size_t>(scenario.runs);
      const int run_id = static_cast<int>(
          idx % static_cast<std::size_t>(scenario.runs));
      result.trials[idx] = run_trial(prepared, scenario.methods[m], run_id);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back(work);
  }
  work();
  for (std::thread& th : pool) {
    th.join();
  }

  result.summary = summarize(result.trials);
  return result;
}

ScenarioSummary summarize(const std::vector<TrialRecord>& trials) {
  ScenarioSummary out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.initial_improvement_pct = nan;
  out.distance_improvement_pct = nan;

  for (Method method : {Method::weighted_d2, Method::uniform}) {
    std::vector<double> initial;
    std::vector<double> final_h;
    std::vector<double> distance;
    double iter_sum = 0.0;
    double conv_sum = 0.0;
    for (const TrialRecord& t : trials) {
      if (t.method != method) {
        continue;
      }
      initial.push_back(t.initial_H);
      final_h.push_back(t.final_H);
      distance.push_back(t.mean_distance);
      iter_sum += t.iterations;
      conv_sum += t.converged ? 1.0 : 0.0;
    }
    if (initial.empty()) {
      continue;
    }
    MethodSummary m;
    m.method = method;
    m.runs = static_cast<int>(initial.size());
    const Stats si = mean_sd(initial);
    const Stats sf = mean_sd(final_h);
    const Stats sd = mean_sd(distance);
    m.initial_mean = si.mean;
    m.initial_sd = si.sd;
    m.final_mean = sf.mean;
    m.final_sd = sf.sd;
    m.distance_mean = sd.mean;
    m.distance_sd = sd.sd;
    m.iterations_mean = iter_sum / static_cast<double>(m.runs);
    m.converged_fraction = conv_sum / static_cast<double>(m.runs);
    out.methods.push_back(m);
  }

  const MethodSummary* d2 = nullptr;
  const MethodSummary* uni = nullptr;
  for (const MethodSummary& m : out.methods) {
    (m.method == Method::weighted_d2 ? d2 : uni) = &m;
  }
  if (d2 != nullptr && uni != nullptr) {
    if (uni->initial_mean != 0.0) {
      out.initial_improvement_pct =
          100.0 * (uni->initial_mean - d2->initial_mean) / uni->initial_mean;
    }
    if (uni->distance_mean != 0.0) {
      out.distance_improvement_pct =
          100.0 * (uni->distance_mean - d2->distance_mean) /
          uni->distance_mean;
    }
  }
  return out;
}

std::string trials_to_csv(const std::vector<TrialRecord>& trials) {
  std::string out =
      "run_id,method,k,epsilon,seed,initial_H,final_H,iterations,"
      "converged,mean_distance\n";
  for (const TrialRecord& t : trials) {
    out += std::to_string(t.run_id);
    out += ',';
    out += to_string(t.method);
    out += ',';
    out += std::to_string(t.k);
    out += ',';
    out += format_double(t.epsilon);
    out += ',';
    out += std::to_string(t.seed);
    out += ',';
    out += format_double(t.initial_H);
    out += ',';
    out += format_double(t.final_H);
    out += ',';
    out += std::to_string(t.iterations);
    out += ',';
    out += t.converged ? '1' : '0';
    out += ',';
    out += format_double(t.mean_distance);
    out += '\n';
  }
  return out;
}

std::string summary_to_csv(const ScenarioSummary& summary) {
  std::string out =
      "method,runs,initial_mean,initial_sd,final_mean,final_sd,"
      "distance_mean,distance_sd,iterations_mean,converged_fraction,"
      "initial_improvement_pct,distance_improvement_pct\n";
  for (const MethodSummary& m : summary.methods) {
    out += to_string(m.method);
    out += ',';
    out += std::to_string(m.runs);
    for (double v : {m.initial_mean, m.initial_sd, m.final_mean, m.final_sd,
                     m.distance_mean, m.distance_sd, m.iterations_mean,
                     m.converged_fraction, summary.initial_improvement_pct,
                     summary.distance_improvement_pct}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << text;
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

}  // namespace

void write_trials_csv(const std::string& path,
                      const std::vector<TrialRecord>& trials) {
  write_text(path, trials_to_csv(trials));
}

void write_summary_csv(const std::string& path,
                       const ScenarioSummary& summary) {
  write_text(path, summary_to_csv(summary));
}

}  // namespace cover

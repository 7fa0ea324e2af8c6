#pragma once

#include <vector>

#include "cover/density.hpp"
#include "cover/geometry.hpp"

namespace cover {

struct DescentSettings {
  double gain = 10.0;  // proportional gain K
  double dt = 0.01;    // integration step
  // Descent stops once the mean per-sensor L1 position change of a step
  // falls below this.
  double convergence_threshold = 1e-4;
  int max_iterations = 10000;
};

struct LloydStep {
  SensorConfiguration positions;  // configuration after the step
  double mean_l1_change = 0.0;    // mean over sensors of |dx| + |dy|
  double coverage = 0.0;          // H of the input configuration
};

// One damped Lloyd update: each sensor moves toward the mass centroid of its
// Voronoi cell, p <- p + gain*dt*(c - p). Requires 0 < gain*dt <= 1, which
// keeps every sensor inside the (convex) domain. A sensor whose cell carries
// no mass stays put.
LloydStep lloyd_step(const SensorConfiguration& sensors,
                     const DensityField& field, const ConvexPolygon& domain,
                     const DescentSettings& settings);

struct DescentTrace {
  // iterates[t] is the configuration after t steps; coverage_history[t] its
  // coverage cost. Both have length iterations + 1.
  std::vector<SensorConfiguration> iterates;
  std::vector<double> coverage_history;
  // Total path length walked by each sensor over the whole descent.
  std::vector<double> per_sensor_distance;
  bool converged = false;
  int iterations = 0;

  double initial_coverage() const { return coverage_history.front(); }
  double final_coverage() const { return coverage_history.back(); }
  // Mean over sensors of the distance traveled.
  double mean_distance() const;
};

// Iterates lloyd_step from `start` until the convergence threshold or the
// iteration cap is hit, recording the full trajectory and coverage history.
DescentTrace run_descent(const SensorConfiguration& start,
                         const DensityField& field, const ConvexPolygon& domain,
                         const DescentSettings& settings);

}  // namespace cover

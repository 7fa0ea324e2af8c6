#include "cover/lloyd.hpp"

#include <cmath>

#include "cover/errors.hpp"

namespace cover {

namespace {

// Depth used inside the descent loop. Shallower than the standalone coverage
// depth: the moments drive both the recorded history and the centroid step,
// and three levels keep the per-iterate error small enough that recorded
// coverage still decreases monotonically (the acceptance slack is 1e-8)
// while the loop stays fast.
constexpr int kDescentQuadratureDepth = 3;

struct ConfigEval {
  double coverage = 0.0;
  std::vector<Vec2> centroids;
};

// One Voronoi build + one moments pass yields the coverage cost and all cell
// centroids of a configuration together.
ConfigEval eval_configuration(const SensorConfiguration& sensors,
                              const DensityField& field,
                              const ConvexPolygon& domain) {
  const VoronoiPartition part = voronoi_partition(sensors, domain);
  ConfigEval ev;
  ev.centroids.reserve(sensors.size());
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const PolygonMoments m =
        polygon_moments(field, part.cells[i], kDescentQuadratureDepth);
    ev.coverage += m.inertia_about(sensors[i]);
    ev.centroids.push_back(
        (part.cells[i].empty() || m.weight <= 0.0) ? sensors[i]
                                                   : m.mass_centroid());
  }
  return ev;
}

void check_settings(const DescentSettings& s) {
  const double step = s.gain * s.dt;
  if (!(step > 0.0) || step > 1.0) {
    throw Error("descent needs 0 < gain*dt <= 1");
  }
  if (!(s.convergence_threshold > 0.0) || s.max_iterations < 0) {
    throw Error("descent needs a positive threshold and iteration cap");
  }
}

SensorConfiguration apply_step(const SensorConfiguration& sensors,
                               const ConfigEval& ev, double step,
                               double& mean_l1) {
  SensorConfiguration next;
  next.reserve(sensors.size());
  double l1 = 0.0;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const Vec2 p = sensors[i] + step * (ev.centroids[i] - sensors[i]);
    l1 += std::abs(p.x - sensors[i].x) + std::abs(p.y - sensors[i].y);
    next.push_back(p);
  }
  mean_l1 = l1 / static_cast<double>(sensors.size());
  return next;
}

}  // namespace

LloydStep lloyd_step(const SensorConfiguration& sensors,
                     const DensityField& field, const ConvexPolygon& domain,
                     const DescentSettings& settings) {
  check_settings(settings);
  const ConfigEval ev = eval_configuration(sensors, field, domain);
  LloydStep out;
  out.coverage = ev.coverage;
  out.positions =
      apply_step(sensors, ev, settings.gain * settings.dt, out.mean_l1_change);
  return out;
}

double DescentTrace::mean_distance() const {
  if (per_sensor_distance.empty()) {
    return 0.0;
  }
  double sum = 0.0;
  for (double d : per_sensor_distance) {
    sum += d;
  }
  return sum / static_cast<double>(per_sensor_distance.size());
}

DescentTrace run_descent(const SensorConfiguration& start,
                         const DensityField& field, const ConvexPolygon& domain,
                         const DescentSettings& settings) {
  check_settings(settings);
  const double step = settings.gain * settings.dt;

  DescentTrace trace;
  trace.per_sensor_distance.assign(start.size(), 0.0);
  SensorConfiguration current = start;
  while (true) {
    const ConfigEval ev = eval_configuration(current, field, domain);
    trace.iterates.push_back(current);
    trace.coverage_history.push_back(ev.coverage);
    if (trace.iterations >= settings.max_iterations) {
      break;
    }
    double mean_l1 = 0.0;
    SensorConfiguration next = apply_step(current, ev, step, mean_l1);
    for (std::size_t i = 0; i < current.size(); ++i) {
      trace.per_sensor_distance[i] += dist(current[i], next[i]);
    }
    current = std::move(next);
    ++trace.iterations;
    if (mean_l1 < settings.convergence_threshold) {
      trace.converged = true;
      const ConfigEval last = eval_configuration(current, field, domain);
      trace.iterates.push_back(current);
      trace.coverage_history.push_back(last.coverage);
      break;
    }
  }
  return trace;
}

}  // namespace cover

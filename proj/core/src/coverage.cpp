#include "cover/coverage.hpp"

#include <cmath>
#include <limits>

#include "cover/errors.hpp"

namespace cover {

double coverage_cost(const SensorConfiguration& sensors,
                     const DensityField& field, const ConvexPolygon& domain,
                     int depth) {
  const VoronoiPartition part = voronoi_partition(sensors, domain);
  double H = 0.0;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    H += polygon_moments(field, part.cells[i], depth).inertia_about(sensors[i]);
  }
  return H;
}

double wkmeans_cost(std::span<const Vec2> points,
                    std::span<const double> weights,
                    std::span<const Vec2> centers) {
  if (centers.empty()) {
    throw Error("wkmeans_cost needs at least one center");
  }
  if (points.size() != weights.size()) {
    throw Error("wkmeans_cost: points/weights size mismatch");
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& c : centers) {
      best = std::min(best, dist2(points[i], c));
    }
    cost += weights[i] * best;
  }
  return cost;
}

double wkmeans_cost(const CellPartition& cells,
                    const SensorConfiguration& sensors) {
  std::vector<Vec2> points;
  std::vector<double> weights;
  points.reserve(cells.cells.size());
  weights.reserve(cells.cells.size());
  for (const GridCell& c : cells.cells) {
    points.push_back(c.centroid);
    weights.push_back(c.weight);
  }
  return wkmeans_cost(points, weights, sensors);
}

SandwichReport sandwich_check(const SensorConfiguration& sensors,
                              const DensityField& field,
                              const ConvexPolygon& domain,
                              const CellPartition& cells) {
  SandwichReport r;
  const VoronoiPartition part = voronoi_partition(sensors, domain);
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    r.H += polygon_moments(field, part.cells[i], kCoverageQuadratureDepth)
               .inertia_about(sensors[i]);
  }
  double total_mass = 0.0;
  for (const GridCell& c : cells.cells) {
    r.inertia_sum += c.inertia;
    total_mass += c.weight;
  }
  r.Phi = wkmeans_cost(cells, sensors);
  r.D = max_neighbor_distance(part, sensors);
  r.epsilon = cells.epsilon;
  r.band = 2.0 * std::sqrt(2.0) * r.D * r.epsilon * total_mass;
  const double middle = r.Phi + r.inertia_sum;
  r.lhs_margin = middle - r.H;
  r.rhs_margin = r.H + r.band - middle;
  r.lhs_ok = r.lhs_margin >= -kSandwichTol;
  r.rhs_ok = r.rhs_margin >= -kSandwichTol;
  return r;
}

}  // namespace cover

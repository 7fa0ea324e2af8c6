#pragma once

#include <span>

#include "cover/density.hpp"
#include "cover/geometry.hpp"
#include "cover/grid.hpp"

namespace cover {

// Depth for coverage integrals over Voronoi cells. Cells shrink as k grows,
// so five levels keep the absolute error orders of magnitude below the 1e-7
// comparison tolerance used by the sandwich check.
inline constexpr int kCoverageQuadratureDepth = 5;

// Slack allowed when testing the two sandwich inequalities.
inline constexpr double kSandwichTol = 1e-7;

// H(P): sum over Voronoi cells of the field-weighted squared distance to the
// cell's own sensor. Validates the configuration via voronoi_partition.
double coverage_cost(const SensorConfiguration& sensors,
                     const DensityField& field, const ConvexPolygon& domain,
                     int depth = kCoverageQuadratureDepth);

// Weighted k-means cost: sum_i weights[i] * min_c |points[i] - centers[c]|^2.
double wkmeans_cost(std::span<const Vec2> points,
                    std::span<const double> weights,
                    std::span<const Vec2> centers);

// Same cost over the mass centroids of a cell partition.
double wkmeans_cost(const CellPartition& cells,
                    const SensorConfiguration& sensors);

struct SandwichReport {
  double H = 0.0;            // continuous coverage cost
  double Phi = 0.0;          // discrete weighted k-means cost
  double inertia_sum = 0.0;  // sum of per-cell inertias J
  double D = 0.0;            // max distance between Voronoi neighbors
  double epsilon = 0.0;      // grid pitch
  double band = 0.0;         // 2*sqrt(2)*D*epsilon*total_mass
  double lhs_margin = 0.0;   // (Phi + sum J) - H,          >= -tol when ok
  double rhs_margin = 0.0;   // H + band - (Phi + sum J),   >= -tol when ok
  bool lhs_ok = false;
  bool rhs_ok = false;
  bool ok() const { return lhs_ok && rhs_ok; }
};

// Evaluates both sides of
//   H(P) <= Phi(P) + sum_i J_i <= H(P) + 2*sqrt(2)*D*epsilon
// for the given configuration. The bound on the right scales with the total
// mass of the field, which is 1 for a normalized field. `cells` must have
// been built over the same domain and field.
SandwichReport sandwich_check(const SensorConfiguration& sensors,
                              const DensityField& field,
                              const ConvexPolygon& domain,
                              const CellPartition& cells);

}  // namespace cover

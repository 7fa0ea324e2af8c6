#pragma once

#include <cstddef>
#include <vector>

#include "cover/density.hpp"
#include "cover/geometry.hpp"

namespace cover {

// One square grid cell clipped to the domain, with its field moments.
struct GridCell {
  ConvexPolygon polygon;
  double weight = 0.0;   // field mass over the cell
  Vec2 centroid{};       // mass centroid (geometric centroid if massless)
  double inertia = 0.0;  // second moment of the field about `centroid`
};

// Cells below this mass are kept in `cells` (they still tile the domain) but
// excluded from `candidates`, the index list sampling draws from.
inline constexpr double kCandidateWeightMin = 1e-15;

struct CellPartition {
  double epsilon = 0.0;
  std::vector<GridCell> cells;
  std::vector<std::size_t> candidates;
};

// Overlays an axis-aligned grid of pitch epsilon on the bounding box of the
// domain, clips every square to the domain, and drops empty intersections.
// Cells are ordered row-major from the bottom-left, which fixes the sampling
// order. Throws Error unless 0 < epsilon <= diameter(domain).
CellPartition build_cells(const ConvexPolygon& domain, double epsilon,
                          const DensityField& field,
                          int depth = kDefaultQuadratureDepth);

}  // namespace cover

#pragma once

#include <string>
#include <vector>

#include "cover/density.hpp"
#include "cover/geometry.hpp"
#include "cover/lloyd.hpp"

namespace cover {

struct PlotFiles {
  std::vector<std::string> files;  // paths written, in emission order
};

// Renders a finished descent: a layout SVG (density contour lines, sensor
// trajectories, final Voronoi cells, start/end markers) plus a
// coverage-vs-iteration SVG, and a CSV twin of every plotted series
// (trajectories, coverage history, contour segments, final cell polygons).
// Files are named {prefix}_layout.svg, {prefix}_coverage.svg,
// {prefix}_trajectories.csv, {prefix}_coverage.csv, {prefix}_contours.csv,
// {prefix}_voronoi.csv inside `directory` (created if missing).
PlotFiles emit_plots(const DescentTrace& trace, const DensityField& field,
                     const ConvexPolygon& domain, const std::string& directory,
                     const std::string& prefix);

}  // namespace cover

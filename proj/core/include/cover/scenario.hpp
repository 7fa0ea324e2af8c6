#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cover/density.hpp"
#include "cover/geometry.hpp"
#include "cover/lloyd.hpp"

namespace cover {

enum class Method {
  weighted_d2,  // D^2-weighted seeding over grid-cell centroids
  uniform,      // i.i.d. uniform placement
};

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);

// Everything one experiment needs: domain, raw density, sensor count, grid
// pitch, the placement methods to compare, run count, and descent settings.
struct Scenario {
  ConvexPolygon domain;
  DensityField density;  // raw field; experiments normalize it over `domain`
  int k = 10;
  double epsilon = 0.1;
  std::vector<Method> methods{Method::weighted_d2, Method::uniform};
  int runs = 50;
  std::uint64_t master_seed = 0;
  DescentSettings descent;
};

// Built-in configuration: unit square, two Gaussian peaks (a broad one near
// the top-right, a sharper one near the bottom-left), k = 10 sensors,
// epsilon = 0.1, 50 runs per method.
Scenario reference_scenario();

// Parses a scenario from JSON text. Recognized keys (all optional except
// "density"):
//   domain:   [[x,y], ...] CCW convex vertices (default unit square)
//   density:  [{amplitude, cx, cy, ax, ay}, ...]
//   k, epsilon, runs, master_seed
//   methods:  ["weighted_d2", "uniform"]
//   gain, dt, convergence_threshold, max_iterations
// Malformed text or values raise Error.
Scenario parse_scenario(const std::string& json_text);

// parse_scenario over the contents of a file; IoError if unreadable.
Scenario load_scenario(const std::string& path);

}  // namespace cover

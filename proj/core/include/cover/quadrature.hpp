#pragma once

#include <cmath>
#include <cstddef>

#include "cover/geometry.hpp"

namespace cover {

// Degree-5 7-point triangle rule applied on a uniform 4-way subdivision of
// each triangle. `depth` halves the edge length per level, so the point count
// per triangle is 7 * 4^depth. Visitation order is deterministic, which keeps
// every integral in the library bit-reproducible.
template <typename Visit>
void for_each_triangle_point(Vec2 a, Vec2 b, Vec2 c, int depth, Visit&& visit) {
  if (depth > 0) {
    const Vec2 ab = 0.5 * (a + b);
    const Vec2 bc = 0.5 * (b + c);
    const Vec2 ca = 0.5 * (c + a);
    for_each_triangle_point(a, ab, ca, depth - 1, visit);
    for_each_triangle_point(ab, b, bc, depth - 1, visit);
    for_each_triangle_point(ca, bc, c, depth - 1, visit);
    for_each_triangle_point(ab, bc, ca, depth - 1, visit);
    return;
  }
  const double area = 0.5 * cross(b - a, c - a);
  // Barycentric abscissae of the 7-point rule: centroid, then two symmetric
  // triples at (6 -+ sqrt(15))/21 with weights (155 -+ sqrt(15))/1200.
  static const double s15 = std::sqrt(15.0);
  static const double p1 = (6.0 - s15) / 21.0;
  static const double p2 = (6.0 + s15) / 21.0;
  static const double w1 = (155.0 - s15) / 1200.0;
  static const double w2 = (155.0 + s15) / 1200.0;
  static const double coords[7][3] = {
      {1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0},
      {1.0 - 2.0 * p1, p1, w1},
      {p1, 1.0 - 2.0 * p1, w1},
      {p1, p1, w1},
      {1.0 - 2.0 * p2, p2, w2},
      {p2, 1.0 - 2.0 * p2, w2},
      {p2, p2, w2},
  };
  for (const auto& row : coords) {
    const double l1 = row[0];
    const double l2 = row[1];
    const double l3 = 1.0 - l1 - l2;
    const Vec2 q = l1 * a + l2 * b + l3 * c;
    visit(q, row[2] * area);
  }
}

// Fans the polygon into triangles around its geometric centroid and visits
// the rule points of each. Empty polygons visit nothing.
template <typename Visit>
void for_each_polygon_point(const ConvexPolygon& poly, int depth,
                            Visit&& visit) {
  const std::size_t n = poly.size();
  if (n < 3) {
    return;
  }
  const Vec2 pivot = poly.centroid();
  const std::vector<Vec2>& v = poly.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for_each_triangle_point(pivot, v[i], v[(i + 1) % n], depth, visit);
  }
}

}  // namespace cover

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "cover/errors.hpp"

namespace cover {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::sqrt(norm2(v)); }
inline double dist2(Vec2 a, Vec2 b) { return norm2(a - b); }
inline double dist(Vec2 a, Vec2 b) { return std::sqrt(dist2(a, b)); }

// Length scale below which vertices are merged, sites are considered
// duplicates, and cross products are treated as collinear. Coordinates are
// assumed O(1); callers working on wildly scaled domains should rescale.
inline constexpr double kGeomTol = 1e-12;

struct AreaCentroid {
  double area = 0.0;
  Vec2 centroid{};
};

// Convex polygon with counter-clockwise vertices. Default-constructed (or
// fully clipped-away) polygons are empty and report zero area.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  // Validates the vertex list: at least 3 distinct vertices, all coordinates
  // finite, convex up to kGeomTol, nonzero area. Clockwise input is reversed.
  // Throws InvalidPolygonError otherwise.
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec2>& vertices() const { return vertices_; }

  double area() const;
  Vec2 centroid() const;

  // Largest vertex-to-vertex distance.
  double diameter() const;

  // True when q is inside or within tol of the boundary.
  bool contains(Vec2 q, double tol = kGeomTol) const;

  // Builds a polygon from clipper output without convexity checks: merges
  // vertices closer than kGeomTol (cyclically) and returns an empty polygon
  // when fewer than 3 survive or the area vanishes.
  static ConvexPolygon from_clip(std::vector<Vec2> vertices);

 private:
  std::vector<Vec2> vertices_;
};

ConvexPolygon unit_square();

// Signed-area shoelace in one pass; area is positive for CCW input.
// Empty polygons give {0, (0,0)}.
AreaCentroid polygon_area_centroid(const ConvexPolygon& poly);

// Intersects poly with the closed half-plane of points at least as close to
// `keep` as to `other` (boundary = perpendicular bisector). Vertices within
// kGeomTol of the boundary count as inside, which makes the operation
// idempotent. Throws DegenerateBisectorError if keep and other coincide
// within kGeomTol.
ConvexPolygon clip_halfplane(const ConvexPolygon& poly, Vec2 keep, Vec2 other);

using SensorConfiguration = std::vector<Vec2>;

struct VoronoiPartition {
  // cells[i] is the region of the domain nearest to sites[i]; may be empty
  // only in degenerate layouts (sites on top of the domain boundary).
  std::vector<ConvexPolygon> cells;
  // Index pairs (i, j), i < j, whose cells share an edge longer than kGeomTol.
  std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs;
};

// Clips the domain against the bisector of every other site, O(k^2) overall.
// Throws DuplicateSiteError for sites within kGeomTol of each other and
// OutOfDomainError for sites outside the domain.
VoronoiPartition voronoi_partition(const SensorConfiguration& sites,
                                   const ConvexPolygon& domain);

// Largest distance between generator sites of adjacent cells; 0 if there are
// no neighbor pairs (k = 1).
double max_neighbor_distance(const VoronoiPartition& partition,
                             const SensorConfiguration& sites);

}  // namespace cover

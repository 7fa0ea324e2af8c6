#include "cover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cover {

namespace {

// Absolute tolerance on |d(q,p_i)^2 - d(q,p_j)^2| used to recognize cell
// vertices that lie on a bisector. Roundoff keeps this below ~1e-14 for O(1)
// coordinates; genuinely off-bisector vertices sit far above it.
constexpr double kBisectorTol = 1e-9;

std::vector<Vec2> merge_close_vertices(std::vector<Vec2> verts) {
  std::vector<Vec2> out;
  out.reserve(verts.size());
  for (const Vec2& v : verts) {
    if (out.empty() || dist(out.back(), v) > kGeomTol) {
      out.push_back(v);
    }
  }
  while (out.size() > 1 && dist(out.front(), out.back()) <= kGeomTol) {
    out.pop_back();
  }
  return out;
}

double signed_area(const std::vector<Vec2>& verts) {
  double twice = 0.0;
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(verts[i], verts[(i + 1) % n]);
  }
  return 0.5 * twice;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) {
  for (const Vec2& v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw InvalidPolygonError("polygon vertex is not finite");
    }
  }
  std::vector<Vec2> verts = merge_close_vertices(std::move(vertices));
  if (verts.size() < 3) {
    throw InvalidPolygonError("polygon needs at least 3 distinct vertices");
  }
  const double a = signed_area(verts);
  if (std::abs(a) <= kGeomTol) {
    throw InvalidPolygonError("polygon area is zero");
  }
  if (a < 0.0) {
    std::reverse(verts.begin(), verts.end());
  }
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = verts[(i + 1) % n] - verts[i];
    const Vec2 e2 = verts[(i + 2) % n] - verts[(i + 1) % n];
    if (cross(e1, e2) < -kGeomTol) {
      throw InvalidPolygonError("polygon is not convex");
    }
  }
  vertices_ = std::move(verts);
}

ConvexPolygon ConvexPolygon::from_clip(std::vector<Vec2> vertices) {
  std::vector<Vec2> verts = merge_close_vertices(std::move(vertices));
  ConvexPolygon poly;
  if (verts.size() < 3 || signed_area(verts) <= 0.0) {
    return poly;
  }
  poly.vertices_ = std::move(verts);
  return poly;
}

double ConvexPolygon::area() const { return polygon_area_centroid(*this).area; }

Vec2 ConvexPolygon::centroid() const {
  return polygon_area_centroid(*this).centroid;
}

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, dist(vertices_[i], vertices_[j]));
    }
  }
  return best;
}

bool ConvexPolygon::contains(Vec2 q, double tol) const {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[(i + 1) % n];
    // cross/|b-a| is the signed distance of q to edge (a,b), positive inside.
    if (cross(b - a, q - a) < -tol * dist(a, b)) {
      return false;
    }
  }
  return true;
}

ConvexPolygon unit_square() {
  return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

AreaCentroid polygon_area_centroid(const ConvexPolygon& poly) {
  const std::vector<Vec2>& v = poly.vertices();
  const std::size_t n = v.size();
  if (n < 3) {
    return {};
  }
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % n];
    const double w = cross(a, b);
    twice_area += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  AreaCentroid out;
  out.area = 0.5 * twice_area;
  if (std::abs(twice_area) > 0.0) {
    out.centroid = {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
  }
  return out;
}

ConvexPolygon clip_halfplane(const ConvexPolygon& poly, Vec2 keep, Vec2 other) {
  const Vec2 d = keep - other;
  const double len = norm(d);
  if (len <= kGeomTol) {
    throw DegenerateBisectorError("bisector of coincident points is undefined");
  }
  if (poly.empty()) {
    return {};
  }
  const Vec2 u = d / len;
  const Vec2 mid = 0.5 * (keep + other);
  const std::vector<Vec2>& v = poly.vertices();
  const std::size_t n = v.size();

  // Signed distance to the bisector, positive on the `keep` side. Vertices
  // within kGeomTol of the plane are retained verbatim so that re-clipping
  // with the same plane returns the polygon unchanged.
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = dot(v[i] - mid, u);
  }
  std::vector<Vec2> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const bool in_i = s[i] >= -kGeomTol;
    const bool in_j = s[j] >= -kGeomTol;
    if (in_i) {
      out.push_back(v[i]);
    }
    if (in_i != in_j) {
      const double t = s[i] / (s[i] - s[j]);
      out.push_back(v[i] + t * (v[j] - v[i]));
    }
  }
  return ConvexPolygon::from_clip(std::move(out));
}

VoronoiPartition voronoi_partition(const SensorConfiguration& sites,
                                   const ConvexPolygon& domain) {
  if (domain.empty()) {
    throw InvalidPolygonError("voronoi_partition needs a nonempty domain");
  }
  const std::size_t k = sites.size();
  if (k == 0) {
    throw OutOfDomainError("voronoi_partition needs at least one site");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!domain.contains(sites[i])) {
      throw OutOfDomainError("site " + std::to_string(i) +
                             " lies outside the domain");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (dist(sites[i], sites[j]) <= kGeomTol) {
        throw DuplicateSiteError("sites " + std::to_string(i) + " and " +
                                 std::to_string(j) + " coincide");
      }
    }
  }

  VoronoiPartition part;
  part.cells.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    ConvexPolygon cell = domain;
    for (std::size_t j = 0; j < k && !cell.empty(); ++j) {
      if (j != i) {
        cell = clip_halfplane(cell, sites[i], sites[j]);
      }
    }
    part.cells.push_back(std::move(cell));
  }

  // Cells of adjacent sites share an edge on the (i,j) bisector. It is enough
  // to scan cell i's edges: both endpoints equidistant to the two sites and a
  // length above the merge tolerance identify a genuine shared edge.
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<Vec2>& cv = part.cells[i].vertices();
    const std::size_t n = cv.size();
    for (std::size_t j = i + 1; j < k; ++j) {
      bool adjacent = false;
      for (std::size_t e = 0; e < n && !adjacent; ++e) {
        const Vec2 a = cv[e];
        const Vec2 b = cv[(e + 1) % n];
        adjacent = std::abs(dist2(a, sites[i]) - dist2(a, sites[j])) <=
                       kBisectorTol &&
                   std::abs(dist2(b, sites[i]) - dist2(b, sites[j])) <=
                       kBisectorTol &&
                   dist(a, b) > kGeomTol;
      }
      if (adjacent) {
        part.neighbor_pairs.emplace_back(i, j);
      }
    }
  }
  return part;
}

double max_neighbor_distance(const VoronoiPartition& partition,
                             const SensorConfiguration& sites) {
  double best = 0.0;
  for (const auto& [i, j] : partition.neighbor_pairs) {
    best = std::max(best, dist(sites[i], sites[j]));
  }
  return best;
}

}  // namespace cover

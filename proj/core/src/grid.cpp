#include "cover/grid.hpp"

#include <algorithm>
#include <cmath>

#include "cover/errors.hpp"

namespace cover {

namespace {

// Sutherland-Hodgman clip of `subject` to a convex CCW `clipper`. Same
// inclusive-boundary convention as clip_halfplane.
ConvexPolygon clip_to_convex(const ConvexPolygon& subject,
                             const ConvexPolygon& clipper) {
  std::vector<Vec2> cur = subject.vertices();
  const std::vector<Vec2>& cl = clipper.vertices();
  const std::size_t m = cl.size();
  for (std::size_t e = 0; e < m && cur.size() >= 3; ++e) {
    const Vec2 a = cl[e];
    const Vec2 b = cl[(e + 1) % m];
    const Vec2 dir = b - a;
    const double len = dist(a, b);
    std::vector<double> s(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      s[i] = cross(dir, cur[i] - a) / len;
    }
    std::vector<Vec2> next;
    next.reserve(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const std::size_t j = (i + 1) % cur.size();
      const bool in_i = s[i] >= -kGeomTol;
      const bool in_j = s[j] >= -kGeomTol;
      if (in_i) {
        next.push_back(cur[i]);
      }
      if (in_i != in_j) {
        const double t = s[i] / (s[i] - s[j]);
        next.push_back(cur[i] + t * (cur[j] - cur[i]));
      }
    }
    cur = std::move(next);
  }
  return ConvexPolygon::from_clip(std::move(cur));
}

}  // namespace

CellPartition build_cells(const ConvexPolygon& domain, double epsilon,
                          const DensityField& field, int depth) {
  if (domain.empty()) {
    throw InvalidPolygonError("build_cells needs a nonempty domain");
  }
  if (!(epsilon > 0.0) || epsilon > domain.diameter()) {
    throw Error("epsilon must be in (0, diameter(domain)]");
  }

  double minx = domain.vertices()[0].x;
  double maxx = minx;
  double miny = domain.vertices()[0].y;
  double maxy = miny;
  for (const Vec2& v : domain.vertices()) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }

  // ceil with a small backoff so widths that are an exact multiple of epsilon
  // (up to roundoff, e.g. 1.0 / 0.1) do not gain a spurious extra column.
  const auto count = [epsilon](double extent) {
    return std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(extent / epsilon - 1e-9)));
  };
  const std::size_t nx = count(maxx - minx);
  const std::size_t ny = count(maxy - miny);

  CellPartition part;
  part.epsilon = epsilon;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double y0 = miny + static_cast<double>(iy) * epsilon;
    const double y1 = (iy + 1 == ny) ? maxy : y0 + epsilon;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x0 = minx + static_cast<double>(ix) * epsilon;
      const double x1 = (ix + 1 == nx) ? maxx : x0 + epsilon;
      const ConvexPolygon box(
          {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
      ConvexPolygon clipped = clip_to_convex(box, domain);
      if (clipped.empty()) {
        continue;
      }
      GridCell cell;
      const PolygonMoments m = polygon_moments(field, clipped, depth);
      cell.polygon = std::move(clipped);
      cell.weight = m.weight;
      cell.centroid = m.mass_centroid();
      cell.inertia = m.inertia_about(cell.centroid);
      part.cells.push_back(std::move(cell));
    }
  }
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    if (part.cells[i].weight >= kCandidateWeightMin) {
      part.candidates.push_back(i);
    }
  }
  return part;
}

}  // namespace cover

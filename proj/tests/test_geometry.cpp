#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "cover/geometry.hpp"
#include "cover/rng.hpp"

using namespace cover;

namespace {

ConvexPolygon right_triangle() {
  return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
}

ConvexPolygon regular_hexagon(double radius) {
  std::vector<Vec2> verts;
  for (int i = 0; i < 6; ++i) {
    const double a = M_PI / 3.0 * i;
    verts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return ConvexPolygon(verts);
}

// Independent intersection of two convex polygons for the adjacency oracle:
// plain Sutherland-Hodgman against each edge of b, keeping the raw vertex
// list so degenerate (segment-shaped) intersections survive. The boundary is
// inclusive within 1e-12; with a hard zero a shared edge evaporates whenever
// roundoff puts its endpoints a few ulps outside the clipping line.
std::vector<Vec2> raw_intersection(const ConvexPolygon& a,
                                   const ConvexPolygon& b) {
  std::vector<Vec2> cur = a.vertices();
  const std::vector<Vec2>& cl = b.vertices();
  for (std::size_t e = 0; e < cl.size() && !cur.empty(); ++e) {
    const Vec2 p = cl[e];
    const Vec2 q = cl[(e + 1) % cl.size()];
    const Vec2 dir = q - p;
    std::vector<Vec2> next;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const std::size_t j = (i + 1) % cur.size();
      const double si = cross(dir, cur[i] - p);
      const double sj = cross(dir, cur[j] - p);
      if (si >= -1e-12) {
        next.push_back(cur[i]);
      }
      if ((si >= -1e-12) != (sj >= -1e-12)) {
        const double t = si / (si - sj);
        next.push_back(cur[i] + t * (cur[j] - cur[i]));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

double max_extent(const std::vector<Vec2>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, dist(pts[i], pts[j]));
    }
  }
  return best;
}

SensorConfiguration random_sites(int k, std::uint64_t seed) {
  RngStream rng(seed, 0);
  SensorConfiguration sites;
  for (int i = 0; i < k; ++i) {
    sites.push_back({rng.next_double(), rng.next_double()});
  }
  return sites;
}

}  // namespace

TEST_CASE("unit square basics") {
  const ConvexPolygon sq = unit_square();
  CHECK(sq.size() == 4);
  CHECK(sq.area() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sq.centroid().x == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sq.centroid().y == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sq.diameter() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("right triangle area and centroid") {
  const AreaCentroid ac = polygon_area_centroid(right_triangle());
  CHECK(ac.area == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ac.centroid.x == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(ac.centroid.y == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("regular hexagon area") {
  const ConvexPolygon hex = regular_hexagon(1.0);
  CHECK(hex.area() ==
        doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-12));
  CHECK(hex.centroid().x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(hex.centroid().y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("clockwise input is normalized to counter-clockwise") {
  const ConvexPolygon cw(
      {{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}});
  CHECK(cw.area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("invalid polygons are rejected") {
  CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}}),
                  InvalidPolygonError);
  // All vertices collinear: zero area.
  CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0}, {0.5, 0.5}, {1.0, 1.0}}),
                  InvalidPolygonError);
  // Reflex vertex.
  CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0},
                                 {2.0, 0.0},
                                 {2.0, 2.0},
                                 {1.0, 0.5},
                                 {0.0, 2.0}}),
                  InvalidPolygonError);
  CHECK_THROWS_AS(
      ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {std::nan(""), 1.0}}),
      InvalidPolygonError);
  // Duplicate vertices collapse below 3.
  CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0},
                                 {0.0, 1e-13},
                                 {1.0, 0.0},
                                 {1.0, 1e-13}}),
                  InvalidPolygonError);
}

TEST_CASE("contains is inclusive at the boundary") {
  const ConvexPolygon sq = unit_square();
  CHECK(sq.contains({0.5, 0.5}));
  CHECK(sq.contains({0.0, 0.0}));
  CHECK(sq.contains({1.0, 0.5}));
  CHECK(sq.contains({0.5, 1.0 + 1e-13}));
  CHECK_FALSE(sq.contains({1.1, 0.5}));
  CHECK_FALSE(sq.contains({0.5, -1e-9}));
}

TEST_CASE("halfplane clip of the unit square") {
  const ConvexPolygon sq = unit_square();
  const Vec2 keep{0.25, 0.5};
  const Vec2 other{0.75, 0.5};
  const ConvexPolygon left = clip_halfplane(sq, keep, other);
  CHECK(left.area() == doctest::Approx(0.5).epsilon(1e-14));
  for (const Vec2& v : left.vertices()) {
    CHECK(v.x <= 0.5 + 1e-12);
  }

  SUBCASE("re-clipping with the same plane is the identity") {
    const ConvexPolygon again = clip_halfplane(left, keep, other);
    REQUIRE(again.size() == left.size());
    // Vertices must be carried over verbatim, not re-derived.
    for (std::size_t i = 0; i < left.size(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < again.size(); ++j) {
        found = found || (left.vertices()[i].x == again.vertices()[j].x &&
                          left.vertices()[i].y == again.vertices()[j].y);
      }
      CHECK(found);
    }
  }

  SUBCASE("clipping away everything yields the empty polygon") {
    const ConvexPolygon none =
        clip_halfplane(left, Vec2{2.0, 0.5}, Vec2{-1.0, 0.5});
    CHECK(none.empty());
    CHECK(none.area() == 0.0);
    // Clipping an empty polygon stays empty and does not throw.
    CHECK(clip_halfplane(none, keep, other).empty());
  }
}

TEST_CASE("degenerate bisector is rejected") {
  CHECK_THROWS_AS(
      clip_halfplane(unit_square(), Vec2{0.5, 0.5}, Vec2{0.5, 0.5}),
      DegenerateBisectorError);
  CHECK_THROWS_AS(clip_halfplane(unit_square(), Vec2{0.5, 0.5},
                                 Vec2{0.5, 0.5 + 1e-13}),
                  DegenerateBisectorError);
}

TEST_CASE("single-site partition covers the whole domain") {
  const ConvexPolygon sq = unit_square();
  const SensorConfiguration sites{{0.3, 0.7}};
  const VoronoiPartition part = voronoi_partition(sites, sq);
  REQUIRE(part.cells.size() == 1);
  CHECK(part.cells[0].area() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(part.neighbor_pairs.empty());
  CHECK(max_neighbor_distance(part, sites) == 0.0);
}

TEST_CASE("two symmetric sites split the square in half") {
  const SensorConfiguration sites{{0.25, 0.5}, {0.75, 0.5}};
  const VoronoiPartition part = voronoi_partition(sites, unit_square());
  REQUIRE(part.cells.size() == 2);
  CHECK(part.cells[0].area() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(part.cells[1].area() == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(part.neighbor_pairs.size() == 1);
  CHECK(part.neighbor_pairs[0].first == 0);
  CHECK(part.neighbor_pairs[0].second == 1);
  CHECK(max_neighbor_distance(part, sites) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("2x2 grid: diagonal cells meet only at a point") {
  const SensorConfiguration sites{
      {0.25, 0.25}, {0.75, 0.25}, {0.25, 0.75}, {0.75, 0.75}};
  const VoronoiPartition part = voronoi_partition(sites, unit_square());
  for (const ConvexPolygon& cell : part.cells) {
    CHECK(cell.area() == doctest::Approx(0.25).epsilon(1e-12));
  }
  const std::set<std::pair<std::size_t, std::size_t>> pairs(
      part.neighbor_pairs.begin(), part.neighbor_pairs.end());
  const std::set<std::pair<std::size_t, std::size_t>> expected{
      {0, 1}, {0, 2}, {1, 3}, {2, 3}};
  CHECK(pairs == expected);
  CHECK(max_neighbor_distance(part, sites) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("collinear sites form a strip partition") {
  const SensorConfiguration sites{{0.1, 0.5}, {0.5, 0.5}, {0.9, 0.5}};
  const VoronoiPartition part = voronoi_partition(sites, unit_square());
  const std::set<std::pair<std::size_t, std::size_t>> pairs(
      part.neighbor_pairs.begin(), part.neighbor_pairs.end());
  const std::set<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {1, 2}};
  CHECK(pairs == expected);
  CHECK(part.cells[0].area() == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(part.cells[1].area() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(part.cells[2].area() == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("partition rejects bad sites") {
  CHECK_THROWS_AS(
      voronoi_partition({{0.5, 0.5}, {0.5, 0.5}}, unit_square()),
      DuplicateSiteError);
  CHECK_THROWS_AS(voronoi_partition({{1.5, 0.5}}, unit_square()),
                  OutOfDomainError);
  CHECK_THROWS_AS(voronoi_partition({}, unit_square()), OutOfDomainError);
}

// Definition-based oracle: the partition must agree with the nearest-site
// rule at random query points, and the cell areas must tile the domain.
TEST_CASE("partition matches the nearest-site rule") {
  for (const std::uint64_t seed : {101ULL, 202ULL}) {
    for (const int k : {5, 12}) {
      const ConvexPolygon domain =
          seed == 101ULL ? unit_square() : regular_hexagon(0.8);
      SensorConfiguration sites;
      RngStream rng(seed, static_cast<std::uint64_t>(k));
      while (static_cast<int>(sites.size()) < k) {
        const Vec2 p{2.0 * rng.next_double() - 1.0,
                     2.0 * rng.next_double() - 1.0};
        if (domain.contains(p, -1e-6)) {
          sites.push_back(p);
        }
      }
      const VoronoiPartition part = voronoi_partition(sites, domain);

      double area_sum = 0.0;
      for (std::size_t i = 0; i < part.cells.size(); ++i) {
        CHECK(part.cells[i].contains(sites[i], 1e-9));
        area_sum += part.cells[i].area();
      }
      CHECK(area_sum == doctest::Approx(domain.area()).epsilon(1e-9));

      RngStream qrng(seed + 7, 99);
      int tested = 0;
      while (tested < 500) {
        const Vec2 q{2.0 * qrng.next_double() - 1.0,
                     2.0 * qrng.next_double() - 1.0};
        if (!domain.contains(q)) {
          continue;
        }
        ++tested;
        std::size_t nearest = 0;
        for (std::size_t i = 1; i < sites.size(); ++i) {
          if (dist2(q, sites[i]) < dist2(q, sites[nearest])) {
            nearest = i;
          }
        }
        CHECK(part.cells[nearest].contains(q, 1e-9));
        for (std::size_t i = 0; i < sites.size(); ++i) {
          if (i != nearest &&
              dist(q, sites[i]) > dist(q, sites[nearest]) + 1e-6) {
            CHECK_FALSE(part.cells[i].contains(q, -1e-9));
          }
        }
      }
    }
  }
}

// Independent adjacency oracle: neighbor pairs are exactly the pairs whose
// cells geometrically overlap in a segment of positive length.
TEST_CASE("neighbor pairs match geometric cell adjacency") {
  const SensorConfiguration sites = random_sites(9, 4242);
  const VoronoiPartition part = voronoi_partition(sites, unit_square());
  const std::set<std::pair<std::size_t, std::size_t>> reported(
      part.neighbor_pairs.begin(), part.neighbor_pairs.end());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      const std::vector<Vec2> overlap =
          raw_intersection(part.cells[i], part.cells[j]);
      const bool touches = max_extent(overlap) > 1e-9;
      CHECK(touches == (reported.count({i, j}) == 1));
    }
  }
}

TEST_CASE("boundary sites are accepted") {
  const SensorConfiguration sites{{0.0, 0.0}, {1.0, 1.0}};
  const VoronoiPartition part = voronoi_partition(sites, unit_square());
  CHECK(part.cells[0].area() + part.cells[1].area() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

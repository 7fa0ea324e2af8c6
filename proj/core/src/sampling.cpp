#include "cover/sampling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cover/errors.hpp"

namespace cover {

namespace {

// Draws an index with probability score[i] / sum(score). Zero-score entries
// are unreachable: the prefix-sum walk advances past them because their
// cumulative sum cannot strictly exceed u. Falls back to the last positive
// entry if roundoff pushes u past the accumulated total.
std::size_t draw_index(const std::vector<double>& score, double total,
                       RngStream& rng) {
  const double u = rng.next_double() * total;
  double cum = 0.0;
  std::size_t last_positive = score.size();
  for (std::size_t i = 0; i < score.size(); ++i) {
    if (score[i] > 0.0) {
      cum += score[i];
      last_positive = i;
      if (cum > u) {
        return i;
      }
    }
  }
  return last_positive;
}

}  // namespace

std::vector<std::size_t> weighted_d2_indices(std::span<const Vec2> points,
                                             std::span<const double> weights,
                                             int k, RngStream& rng) {
  if (k < 1) {
    throw Error("weighted_d2_indices needs k >= 1");
  }
  if (points.size() != weights.size()) {
    throw Error("weighted_d2_indices: points/weights size mismatch");
  }
  const std::size_t n = points.size();
  std::size_t positive = 0;
  double total_weight = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw Error("weighted_d2_indices: negative weight");
    }
    if (w > 0.0) {
      ++positive;
      total_weight += w;
    }
  }
  if (positive < static_cast<std::size_t>(k)) {
    throw InsufficientCandidatesError(
        "requested " + std::to_string(k) + " picks from " +
        std::to_string(positive) + " positive-weight candidates");
  }

  std::vector<std::size_t> picks;
  picks.reserve(static_cast<std::size_t>(k));
  std::vector<double> score(weights.begin(), weights.end());
  picks.push_back(draw_index(score, total_weight, rng));

  // After each pick only the minimum squared distance needs refreshing, and
  // only against the newest pick.
  std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
  while (picks.size() < static_cast<std::size_t>(k)) {
    const Vec2 newest = points[picks.back()];
    double total_score = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      min_d2[i] = std::min(min_d2[i], dist2(points[i], newest));
      score[i] = weights[i] * min_d2[i];
      total_score += score[i];
    }
    if (!(total_score > 0.0)) {
      throw DegenerateDistributionError(
          "all remaining candidates coincide with picked points");
    }
    picks.push_back(draw_index(score, total_score, rng));
  }
  return picks;
}

SensorConfiguration weighted_d2_sample(const CellPartition& cells, int k,
                                       RngStream& rng) {
  std::vector<Vec2> points;
  std::vector<double> weights;
  points.reserve(cells.candidates.size());
  weights.reserve(cells.candidates.size());
  for (std::size_t idx : cells.candidates) {
    points.push_back(cells.cells[idx].centroid);
    weights.push_back(cells.cells[idx].weight);
  }
  const std::vector<std::size_t> picks =
      weighted_d2_indices(points, weights, k, rng);
  SensorConfiguration config;
  config.reserve(picks.size());
  for (std::size_t p : picks) {
    config.push_back(points[p]);
  }
  return config;
}

SensorConfiguration uniform_sample(const ConvexPolygon& domain, int k,
                                   RngStream& rng) {
  if (k < 1) {
    throw Error("uniform_sample needs k >= 1");
  }
  if (domain.empty()) {
    throw InvalidPolygonError("uniform_sample needs a nonempty domain");
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
  SensorConfiguration config;
  config.reserve(static_cast<std::size_t>(k));
  while (config.size() < static_cast<std::size_t>(k)) {
    const Vec2 q{minx + rng.next_double() * (maxx - minx),
                 miny + rng.next_double() * (maxy - miny)};
    if (domain.contains(q)) {
      config.push_back(q);
    }
  }
  return config;
}

}  // namespace cover

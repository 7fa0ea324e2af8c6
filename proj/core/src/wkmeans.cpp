#include "cover/wkmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cover/coverage.hpp"
#include "cover/errors.hpp"
#include "cover/sampling.hpp"

namespace cover {

namespace {

void validate_set(const WeightedPointSet& set) {
  if (set.points.empty()) {
    throw Error("weighted point set is empty");
  }
  if (set.points.size() != set.weights.size()) {
    throw Error("weighted point set: points/weights size mismatch");
  }
  for (double w : set.weights) {
    if (w < 0.0) {
      throw Error("weighted point set: negative weight");
    }
  }
}

struct BlockStats {
  double W = 0.0;
  double Sx = 0.0;
  double Sy = 0.0;
  double Sxx = 0.0;  // sum of w * |x|^2
};

double partition_cost(const WeightedPointSet& set,
                      const std::vector<int>& assign, int blocks) {
  // Per-block cost around the weighted centroid:
  //   sum w|x|^2 - |sum w x|^2 / W.
  std::vector<BlockStats> st(static_cast<std::size_t>(blocks));
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    BlockStats& b = st[static_cast<std::size_t>(assign[i])];
    const double w = set.weights[i];
    b.W += w;
    b.Sx += w * set.points[i].x;
    b.Sy += w * set.points[i].y;
    b.Sxx += w * norm2(set.points[i]);
  }
  double cost = 0.0;
  for (const BlockStats& b : st) {
    if (b.W > 0.0) {
      cost += b.Sxx - (b.Sx * b.Sx + b.Sy * b.Sy) / b.W;
    }
  }
  return cost;
}

}  // namespace

BruteForceOpt brute_force_opt(const WeightedPointSet& set, int k) {
  validate_set(set);
  if (k < 1) {
    throw Error("brute_force_opt needs k >= 1");
  }
  const int n = static_cast<int>(set.points.size());
  if (n > kBruteForceMaxPoints || k > kBruteForceMaxCenters) {
    throw InstanceTooLargeError("brute_force_opt limited to " +
                                std::to_string(kBruteForceMaxPoints) +
                                " points and " +
                                std::to_string(kBruteForceMaxCenters) +
                                " centers");
  }

  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<int> best_assign;
  double best_cost = std::numeric_limits<double>::infinity();
  int best_blocks = 0;

  // Restricted growth strings: assign[i] may reuse an existing block label or
  // open the next one, never exceeding k blocks. Enumerates every partition
  // into at most k nonempty clusters exactly once.
  const auto enumerate = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      const double cost = partition_cost(set, assign, used);
      if (cost < best_cost) {
        best_cost = cost;
        best_assign = assign;
        best_blocks = used;
      }
      return;
    }
    const int limit = std::min(used, k - 1);
    for (int b = 0; b <= limit; ++b) {
      assign[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  enumerate(enumerate, 0, 0);

  // Recompute the winning cost directly around the centroids; the
  // enumeration formula has a subtraction the direct sum avoids.
  BruteForceOpt out;
  std::vector<BlockStats> st(static_cast<std::size_t>(best_blocks));
  std::vector<int> count(static_cast<std::size_t>(best_blocks), 0);
  std::vector<Vec2> plain_sum(static_cast<std::size_t>(best_blocks));
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    BlockStats& b = st[static_cast<std::size_t>(best_assign[i])];
    const double w = set.weights[i];
    b.W += w;
    b.Sx += w * set.points[i].x;
    b.Sy += w * set.points[i].y;
    ++count[static_cast<std::size_t>(best_assign[i])];
    plain_sum[static_cast<std::size_t>(best_assign[i])] =
        plain_sum[static_cast<std::size_t>(best_assign[i])] + set.points[i];
  }
  out.centers.resize(static_cast<std::size_t>(best_blocks));
  for (int b = 0; b < best_blocks; ++b) {
    const BlockStats& s = st[static_cast<std::size_t>(b)];
    // Massless blocks get the plain vertex mean; their cost share is zero.
    out.centers[static_cast<std::size_t>(b)] =
        s.W > 0.0 ? Vec2{s.Sx / s.W, s.Sy / s.W}
                  : plain_sum[static_cast<std::size_t>(b)] /
                        static_cast<double>(count[static_cast<std::size_t>(b)]);
  }
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    out.cost += set.weights[i] *
                dist2(set.points[i],
                      out.centers[static_cast<std::size_t>(best_assign[i])]);
  }
  return out;
}

Lemma1Report lemma1_check(const WeightedPointSet& set) {
  validate_set(set);
  double W = 0.0;
  Vec2 sum{};
  for (std::size_t i = 0; i < set.size(); ++i) {
    W += set.weights[i];
    sum = sum + set.weights[i] * set.points[i];
  }
  if (!(W > 0.0)) {
    throw DegenerateDistributionError("lemma1_check needs positive total mass");
  }
  const Vec2 centroid = sum / W;

  Lemma1Report r;
  for (std::size_t i = 0; i < set.size(); ++i) {
    r.opt_cost += set.weights[i] * dist2(set.points[i], centroid);
  }
  for (std::size_t c = 0; c < set.size(); ++c) {
    double cost_given_c = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      cost_given_c += set.weights[i] * dist2(set.points[i], set.points[c]);
    }
    r.exact_expectation += (set.weights[c] / W) * cost_given_c;
  }
  r.ratio = r.opt_cost > 0.0 ? r.exact_expectation / r.opt_cost : 1.0;
  r.ok = std::abs(r.exact_expectation - 2.0 * r.opt_cost) <= kLemmaTol;
  return r;
}

double lemma2_exact_expectation(const WeightedPointSet& cluster,
                                std::span<const Vec2> existing_centers) {
  validate_set(cluster);
  if (existing_centers.empty()) {
    throw Error("lemma2_exact_expectation needs at least one existing center");
  }
  const std::size_t n = cluster.size();
  std::vector<double> d2(n);
  double total_score = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& z : existing_centers) {
      best = std::min(best, dist2(cluster.points[i], z));
    }
    d2[i] = best;
    total_score += cluster.weights[i] * d2[i];
  }
  if (!(total_score > 0.0)) {
    throw DegenerateDistributionError(
        "every candidate draw probability is zero");
  }
  double expectation = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    const double p = cluster.weights[c] * d2[c] / total_score;
    if (p == 0.0) {
      continue;
    }
    double cost_given_c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cost_given_c += cluster.weights[i] *
                      std::min(d2[i], dist2(cluster.points[i],
                                            cluster.points[c]));
    }
    expectation += p * cost_given_c;
  }
  return expectation;
}

BoundCheckReport theorem_bound_check(const WeightedPointSet& set, int k,
                                     int trials, RngStream& rng) {
  if (trials < 1) {
    throw Error("theorem_bound_check needs trials >= 1");
  }
  BoundCheckReport r;
  r.trials = trials;
  r.opt_cost = brute_force_opt(set, k).cost;
  r.factor = 8.0 * (std::log(static_cast<double>(k)) + 2.0);

  double sum = 0.0;
  std::vector<Vec2> centers;
  for (int t = 0; t < trials; ++t) {
    const std::vector<std::size_t> picks =
        weighted_d2_indices(set.points, set.weights, k, rng);
    centers.clear();
    for (std::size_t p : picks) {
      centers.push_back(set.points[p]);
    }
    sum += wkmeans_cost(set.points, set.weights, centers);
  }
  r.mean_cost = sum / static_cast<double>(trials);
  if (r.opt_cost > 0.0) {
    r.ratio = r.mean_cost / r.opt_cost;
    r.ok = r.mean_cost <= r.factor * r.opt_cost * (1.0 + 1e-12);
  } else {
    r.ratio = r.mean_cost == 0.0 ? 1.0
                                 : std::numeric_limits<double>::infinity();
    r.ok = r.mean_cost <= 1e-12;
  }
  return r;
}

WeightedPointSet random_weighted_instance(RngStream& rng, int min_points,
                                          int max_points) {
  if (min_points < 1 || max_points < min_points) {
    throw Error("random_weighted_instance needs 1 <= min_points <= max_points");
  }
  const int span = max_points - min_points + 1;
  const int n =
      min_points +
      std::min(span - 1, static_cast<int>(rng.next_double() * span));
  WeightedPointSet set;
  set.points.reserve(static_cast<std::size_t>(n));
  set.weights.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = rng.next_double();
    const double y = rng.next_double();
    set.points.push_back({x, y});
    set.weights.push_back(0.1 + rng.next_double());
  }
  return set;
}

}  // namespace cover

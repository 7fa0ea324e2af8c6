#pragma once

#include <span>
#include <vector>

#include "cover/geometry.hpp"
#include "cover/rng.hpp"

namespace cover {

struct WeightedPointSet {
  std::vector<Vec2> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

// Enumeration guards for the exact optimizer: set partitions of up to 12
// points into at most 3 blocks (under 90k partitions).
inline constexpr int kBruteForceMaxPoints = 12;
inline constexpr int kBruteForceMaxCenters = 3;

struct BruteForceOpt {
  double cost = 0.0;
  // Optimal centers, one per nonempty cluster of the best partition (fewer
  // than k entries when merging clusters is already optimal).
  std::vector<Vec2> centers;
};

// Exact weighted k-means optimum by enumerating every partition of the
// points into at most k clusters (restricted growth strings); each cluster's
// best center is its weighted centroid. Throws InstanceTooLargeError beyond
// the guards above and Error for empty input, k < 1, or negative weights.
BruteForceOpt brute_force_opt(const WeightedPointSet& set, int k);

struct Lemma1Report {
  double opt_cost = 0.0;           // 1-center optimum of the set
  double exact_expectation = 0.0;  // E[cost] under mass-proportional seeding
  double ratio = 0.0;              // exact_expectation / opt_cost
  bool ok = false;                 // |exact_expectation - 2*opt_cost| <= tol
};

inline constexpr double kLemmaTol = 1e-10;

// Closed-form check that seeding a single center by drawing a point with
// probability proportional to its weight has expected cost exactly twice the
// 1-center optimum. No sampling involved; the expectation is a finite sum.
Lemma1Report lemma1_check(const WeightedPointSet& set);

// Exact expectation of the cluster's cost after adding one more center drawn
// from the cluster with probability proportional to w_i * d_i^2, where d_i is
// the distance to the nearest of the existing centers. Each point then pays
// min(d_i^2, distance to the new center^2) times its weight. Throws
// DegenerateDistributionError when every draw probability is zero.
double lemma2_exact_expectation(const WeightedPointSet& cluster,
                                std::span<const Vec2> existing_centers);

struct BoundCheckReport {
  double mean_cost = 0.0;  // Monte Carlo mean of the seeded cost
  double opt_cost = 0.0;   // exact k-center optimum
  double factor = 0.0;     // 8 * (ln k + 2)
  double ratio = 0.0;      // mean_cost / opt_cost (1 when both are zero)
  int trials = 0;
  bool ok = false;         // mean_cost <= factor * opt_cost (small fp slack)
};

// Monte Carlo check of the seeding guarantee E[cost] <= 8(ln k + 2) * OPT:
// runs `trials` independent D^2-weighted seedings of k centers and compares
// the mean cost against the exact optimum.
BoundCheckReport theorem_bound_check(const WeightedPointSet& set, int k,
                                     int trials, RngStream& rng);

// Random test instance: n points uniform in the unit square with weights
// uniform in [0.1, 1.1]. Point count uniform in [min_points, max_points].
WeightedPointSet random_weighted_instance(RngStream& rng, int min_points,
                                          int max_points);

}  // namespace cover

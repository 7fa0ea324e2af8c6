#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <doctest.h>

#include "cover/coverage.hpp"
#include "cover/errors.hpp"
#include "cover/rng.hpp"
#include "cover/sampling.hpp"
#include "cover/wkmeans.hpp"

using namespace cover;

namespace {

// Exact 2-center optimum by trying all 2^n binary labelings, accumulating
// block centroids directly. Independent of the restricted-growth enumeration
// and of the subtraction-form cost inside brute_force_opt.
double two_center_oracle(const WeightedPointSet& set) {
  const std::size_t n = set.size();
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec2 c[2] = {{0.0, 0.0}, {0.0, 0.0}};
    double w[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const int b = (mask >> i) & 1u;
      c[b] = c[b] + set.weights[i] * set.points[i];
      w[b] += set.weights[i];
    }
    for (int b = 0; b < 2; ++b) {
      if (w[b] > 0.0) {
        c[b] = c[b] / w[b];
      }
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cost += set.weights[i] * dist2(set.points[i], c[(mask >> i) & 1u]);
    }
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace

TEST_CASE("one- and two-center optima of a two-point set") {
  WeightedPointSet set;
  set.points = {{0.0, 0.0}, {2.0, 0.0}};
  set.weights = {1.0, 1.0};

  const BruteForceOpt one = brute_force_opt(set, 1);
  CHECK(one.cost == doctest::Approx(2.0).epsilon(1e-14));
  REQUIRE(one.centers.size() == 1);
  CHECK(one.centers[0].x == doctest::Approx(1.0).epsilon(1e-14));

  const BruteForceOpt two = brute_force_opt(set, 2);
  CHECK(two.cost == 0.0);
  CHECK(two.centers.size() == 2);

  // Unequal weights drag the single center toward the heavy point.
  set.weights = {1.0, 3.0};
  const BruteForceOpt heavy = brute_force_opt(set, 1);
  CHECK(heavy.centers[0].x == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(heavy.cost == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("square corners split into opposite pairs") {
  WeightedPointSet set;
  set.points = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  set.weights = {1.0, 1.0, 1.0, 1.0};
  const BruteForceOpt two = brute_force_opt(set, 2);
  CHECK(two.cost == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.centers.size() == 2);
}

TEST_CASE("enumeration guards and input validation") {
  WeightedPointSet big;
  for (int i = 0; i < 13; ++i) {
    big.points.push_back({static_cast<double>(i), 0.0});
    big.weights.push_back(1.0);
  }
  CHECK_THROWS_AS(brute_force_opt(big, 2), InstanceTooLargeError);

  WeightedPointSet small;
  small.points = {{0.0, 0.0}, {1.0, 0.0}};
  small.weights = {1.0, 1.0};
  CHECK_THROWS_AS(brute_force_opt(small, 4), InstanceTooLargeError);
  CHECK_THROWS_AS(brute_force_opt(small, 0), Error);

  WeightedPointSet empty;
  CHECK_THROWS_AS(brute_force_opt(empty, 1), Error);

  small.weights = {1.0, -1.0};
  CHECK_THROWS_AS(brute_force_opt(small, 1), Error);
  small.weights = {1.0};
  CHECK_THROWS_AS(brute_force_opt(small, 1), Error);
}

TEST_CASE("brute force matches the binary-labeling oracle for two centers") {
  RngStream rng(314, 0);
  for (int t = 0; t < 40; ++t) {
    const WeightedPointSet set = random_weighted_instance(rng, 2, 8);
    const double oracle = two_center_oracle(set);
    const double got = brute_force_opt(set, 2).cost;
    CAPTURE(t);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("no random center set beats the enumerated optimum") {
  RngStream rng(217, 0);
  for (int t = 0; t < 12; ++t) {
    const WeightedPointSet set = random_weighted_instance(rng, 3, 9);
    for (int k = 1; k <= 3; ++k) {
      const double opt = brute_force_opt(set, k).cost;
      for (int c = 0; c < 25; ++c) {
        std::vector<Vec2> centers;
        for (int j = 0; j < k; ++j) {
          centers.push_back({rng.next_double(), rng.next_double()});
        }
        CHECK(opt <= wkmeans_cost(set.points, set.weights, centers) + 1e-12);
      }
    }
  }
}

TEST_CASE("single-center seeding pays exactly twice the optimum") {
  WeightedPointSet set;
  set.points = {{0.0, 0.0}, {2.0, 0.0}};
  set.weights = {1.0, 1.0};
  const Lemma1Report r = lemma1_check(set);
  CHECK(r.opt_cost == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.exact_expectation == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(r.ratio == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.ok);

  RngStream rng(555, 0);
  for (int t = 0; t < 30; ++t) {
    const WeightedPointSet inst = random_weighted_instance(rng, 2, 10);
    const Lemma1Report rep = lemma1_check(inst);
    CAPTURE(t);
    CHECK(rep.ok);
    CHECK(std::abs(rep.exact_expectation - 2.0 * rep.opt_cost) <= kLemmaTol);
  }

  WeightedPointSet massless;
  massless.points = {{0.0, 0.0}, {1.0, 0.0}};
  massless.weights = {0.0, 0.0};
  CHECK_THROWS_AS(lemma1_check(massless), DegenerateDistributionError);
}

TEST_CASE("seeding expectation agrees with direct simulation") {
  RngStream make(808, 0);
  const WeightedPointSet set = random_weighted_instance(make, 6, 6);
  const Lemma1Report r = lemma1_check(set);

  // Simulate: first pick proportional to weight, pay the 1-center cost at
  // the picked point.
  RngStream rng(808, 1);
  const int trials = 200000;
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto pick = weighted_d2_indices(set.points, set.weights, 1, rng);
    const std::vector<Vec2> center{set.points[pick[0]]};
    sum += wkmeans_cost(set.points, set.weights, center);
  }
  CHECK(sum / trials == doctest::Approx(r.exact_expectation).epsilon(0.02));
}

TEST_CASE("adding a center to a covered cluster costs nothing") {
  WeightedPointSet cluster;
  cluster.points = {{0.0, 0.0}, {1.0, 0.0}};
  cluster.weights = {1.0, 1.0};
  const std::vector<Vec2> at_first{{0.0, 0.0}};
  CHECK(lemma2_exact_expectation(cluster, at_first) == 0.0);
}

TEST_CASE("three collinear points give the hand-computed expectation") {
  // Scores from center (0,0): 0, 1, 9. Picking x=1 (p=0.1) leaves cost 4;
  // picking x=3 (p=0.9) leaves cost 1.
  WeightedPointSet cluster;
  cluster.points = {{0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}};
  cluster.weights = {1.0, 1.0, 1.0};
  const std::vector<Vec2> existing{{0.0, 0.0}};
  const double e = lemma2_exact_expectation(cluster, existing);
  CHECK(e == doctest::Approx(1.3).epsilon(1e-14));

  CHECK_THROWS_AS(lemma2_exact_expectation(cluster, std::vector<Vec2>{}),
                  Error);
  WeightedPointSet covered;
  covered.points = {{0.0, 0.0}};
  covered.weights = {1.0};
  CHECK_THROWS_AS(lemma2_exact_expectation(covered, existing),
                  DegenerateDistributionError);
}

TEST_CASE("refreshed clusters stay within eight times their optimum") {
  RngStream rng(999, 0);
  for (int t = 0; t < 30; ++t) {
    const WeightedPointSet cluster = random_weighted_instance(rng, 2, 8);
    std::vector<Vec2> existing;
    const int m = 1 + static_cast<int>(rng.next_double() * 3.0);
    for (int j = 0; j < m; ++j) {
      existing.push_back({-2.0 + 4.0 * rng.next_double(),
                          -2.0 + 4.0 * rng.next_double()});
    }
    const double opt = brute_force_opt(cluster, 1).cost;
    double e = 0.0;
    bool degenerate = false;
    try {
      e = lemma2_exact_expectation(cluster, existing);
    } catch (const DegenerateDistributionError&) {
      degenerate = true;
    }
    CAPTURE(t);
    if (!degenerate) {
      CHECK(e <= 8.0 * opt + kLemmaTol);
    }
  }
}

TEST_CASE("refresh expectation agrees with direct simulation") {
  RngStream make(606, 0);
  const WeightedPointSet cluster = random_weighted_instance(make, 7, 7);
  const std::vector<Vec2> existing{{-0.5, 0.2}, {1.3, 0.8}};
  const double exact = lemma2_exact_expectation(cluster, existing);

  RngStream rng(606, 1);
  const std::size_t n = cluster.size();
  std::vector<double> d2(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d2[i] = std::min(dist2(cluster.points[i], existing[0]),
                     dist2(cluster.points[i], existing[1]));
    total += cluster.weights[i] * d2[i];
  }
  const int trials = 200000;
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double u = rng.next_double() * total;
    double cum = 0.0;
    std::size_t pick = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      cum += cluster.weights[i] * d2[i];
      if (cum > u) {
        pick = i;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      sum += cluster.weights[i] *
             std::min(d2[i], dist2(cluster.points[i], cluster.points[pick]));
    }
  }
  CHECK(sum / trials == doctest::Approx(exact).epsilon(0.02));
}

TEST_CASE("seeded cost stays under the logarithmic factor") {
  RngStream make(1212, 0);
  const WeightedPointSet set = random_weighted_instance(make, 8, 8);
  RngStream rng(1212, 1);
  const BoundCheckReport r = theorem_bound_check(set, 2, 2000, rng);
  CHECK(r.trials == 2000);
  CHECK(r.factor == doctest::Approx(8.0 * (std::log(2.0) + 2.0)).epsilon(1e-14));
  CHECK(r.opt_cost > 0.0);
  CHECK(r.mean_cost >= r.opt_cost);
  CHECK(r.ok);

  CHECK_THROWS_AS(theorem_bound_check(set, 2, 0, rng), Error);
}

TEST_CASE("picking every point reaches the zero optimum") {
  WeightedPointSet set;
  set.points = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  set.weights = {1.0, 2.0, 3.0};
  RngStream rng(4321, 0);
  const BoundCheckReport r = theorem_bound_check(set, 3, 50, rng);
  CHECK(r.opt_cost == 0.0);
  CHECK(r.mean_cost == 0.0);
  CHECK(r.ratio == 1.0);
  CHECK(r.ok);
}

TEST_CASE("random instances respect the requested ranges") {
  RngStream rng(777, 0);
  for (int t = 0; t < 200; ++t) {
    const WeightedPointSet set = random_weighted_instance(rng, 4, 12);
    REQUIRE(set.size() >= 4);
    REQUIRE(set.size() <= 12);
    REQUIRE(set.points.size() == set.weights.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
      CHECK(set.points[i].x >= 0.0);
      CHECK(set.points[i].x <= 1.0);
      CHECK(set.points[i].y >= 0.0);
      CHECK(set.points[i].y <= 1.0);
      CHECK(set.weights[i] >= 0.1);
      CHECK(set.weights[i] <= 1.1);
    }
  }
  CHECK_THROWS_AS(random_weighted_instance(rng, 0, 5), Error);
  CHECK_THROWS_AS(random_weighted_instance(rng, 6, 5), Error);
}

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cover/grid.hpp"
#include "cover/rng.hpp"

namespace cover {

// Greedy D^2-weighted seeding over a finite weighted point set: the first
// index is drawn with probability proportional to w_i, each later one with
// probability proportional to w_i * d(x_i, picks)^2 where d is the distance
// to the nearest index picked so far. Already-picked indices have d = 0 and
// can never repeat. Works on any point set, not just grid-cell centroids.
//
// Throws InsufficientCandidatesError when fewer than k indices have positive
// weight, DegenerateDistributionError when every remaining score w_i * d^2
// is zero (duplicate points), and Error for negative weights or k < 1.
std::vector<std::size_t> weighted_d2_indices(std::span<const Vec2> points,
                                             std::span<const double> weights,
                                             int k, RngStream& rng);

// D^2-weighted seeding over the positive-mass cells of a partition; returns
// the centroids of the k chosen cells in pick order.
SensorConfiguration weighted_d2_sample(const CellPartition& cells, int k,
                                       RngStream& rng);

// k points i.i.d. uniform over the domain, by rejection from the bounding
// box (for a convex domain the acceptance rate is at least 1/2).
SensorConfiguration uniform_sample(const ConvexPolygon& domain, int k,
                                   RngStream& rng);

}  // namespace cover

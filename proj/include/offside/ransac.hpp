#pragma once

#include <cstdint>
#include <vector>

#include "offside/geometry.hpp"

namespace offside {

struct RansacParams {
  int iterations = 1000;
  double inlier_dist = 20.0;     // pixels
  double early_exit_frac = 0.6;  // stop once best inliers / total >= this
  std::uint64_t seed = 0;
};

struct VanishingPoint {
  double x = 0.0;
  double y = 0.0;
  int inlier_count = 0;
  int total_points = 0;
};

/// Consensus point of the stripe-line intersection cloud. Each seeded round
/// samples two distinct points, forms the line through them, and counts
/// points within inlier_dist of it; the best round's inliers are averaged.
/// Rounds stop early once the best inlier fraction reaches early_exit_frac.
/// Coincident sample pairs are redrawn; a cloud collapsed to one spot (no
/// sampled model holds even 2 points) yields the mean of all points with
/// every point an inlier. Throws TooFewPoints for fewer than 2 points.
VanishingPoint ransac_vanishing_point(const std::vector<Vec2>& points, const RansacParams& params);

}  // namespace offside

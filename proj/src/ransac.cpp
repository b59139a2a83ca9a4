#include "offside/ransac.hpp"

#include <algorithm>
#include <random>

namespace offside {

VanishingPoint ransac_vanishing_point(const std::vector<Vec2>& points,
                                      const RansacParams& params) {
  const std::size_t n = points.size();
  if (n < 2) raise(Errc::TooFewPoints, "vanishing-point consensus needs at least 2 points");
  if (params.iterations < 1 || params.inlier_dist <= 0.0) {
    raise(Errc::BadThresholds, "ransac requires iterations >= 1 and inlier_dist > 0");
  }

  if (std::all_of(points.begin(), points.end(), [&](const Vec2& p) { return p == points[0]; })) {
    return VanishingPoint{points[0].x, points[0].y, static_cast<int>(n), static_cast<int>(n)};
  }

  // mt19937_64 with modulo draws: the engine's output sequence is fixed by
  // the standard, so results are reproducible across platforms (the library
  // distribution adapters are not).
  std::mt19937_64 rng(params.seed);
  auto draw = [&rng, n]() { return static_cast<std::size_t>(rng() % n); };

  std::vector<std::uint8_t> best_inliers;
  int best_count = -1;
  for (int iter = 0; iter < params.iterations; ++iter) {
    // Sample two distinct, non-coincident points; duplicates in the cloud
    // (e.g. repeated intersections of a pencil) are redrawn.
    std::size_t i = 0, j = 0;
    bool ok = false;
    for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
      i = draw();
      j = draw();
      ok = i != j && !(points[i] == points[j]);
    }
    if (!ok) continue;

    const HomogLine model = line_through(points[i], points[j]);
    std::vector<std::uint8_t> inliers(n, 0);
    int count = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (point_line_distance(points[p], model) <= params.inlier_dist) {
        inliers[p] = 1;
        ++count;
      }
    }
    if (count > best_count) {
      best_count = count;
      best_inliers = std::move(inliers);
    }
    if (static_cast<double>(best_count) / static_cast<double>(n) >= params.early_exit_frac) {
      break;
    }
  }

  if (best_count < 2) {
    // Either every round failed to sample a non-coincident pair, or the cloud
    // is so tightly collapsed that a two-point line model cannot numerically
    // explain even its own samples. Both mean the cloud is one repeated
    // location at double precision, so the mean of everything is that spot.
    best_inliers.assign(n, 1);
    best_count = static_cast<int>(n);
  }

  double sx = 0.0, sy = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    if (best_inliers[p]) {
      sx += points[p].x;
      sy += points[p].y;
    }
  }
  return VanishingPoint{sx / best_count, sy / best_count, best_count, static_cast<int>(n)};
}

}  // namespace offside

#pragma once

// Reference implementations the tests check the library against. Each one is
// derived independently (direct formula or a different algorithm), so a bug
// in the production path cannot hide in its own mirror image.

#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "offside/geometry.hpp"
#include "offside/raster.hpp"
#include "offside/ransac.hpp"
#include "offside/segmentation.hpp"

namespace oracle {

// Portable draws: mt19937_64's output sequence is pinned by the standard,
// the distribution templates are not.
inline double unif(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() % 1000001) / 1e6);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Inverse hexcone (sector formula), for HSV round trips.
inline void hsv_to_rgb(float h, float s, float v, float& r, float& g, float& b) {
  if (s <= 0.0f) {
    r = g = b = v;
    return;
  }
  const float hp = h / 60.0f;
  const int sector = static_cast<int>(std::floor(hp)) % 6;
  const float f = hp - std::floor(hp);
  const float p = v * (1.0f - s);
  const float q = v * (1.0f - s * f);
  const float t = v * (1.0f - s * (1.0f - f));
  switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
  }
}

// Normalized Gaussian taps, radius ceil(3 sigma), as a direct formula.
inline std::vector<double> gaussian_taps(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    taps[k + radius] = std::exp(-(static_cast<double>(k) * k) / (2.0 * sigma * sigma));
    sum += taps[k + radius];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

// Exact polar form (rho, theta in [0, pi)) of the line through two points.
inline std::pair<double, double> polar_through(double x0, double y0, double x1, double y1) {
  double nx = y1 - y0;
  double ny = x0 - x1;
  const double n = std::hypot(nx, ny);
  nx /= n;
  ny /= n;
  double rho = nx * x0 + ny * y0;
  double theta = std::atan2(ny, nx);
  if (theta < 0.0) {
    theta += 3.14159265358979323846;
    rho = -rho;
  }
  if (theta >= 3.14159265358979323846) {
    theta -= 3.14159265358979323846;
    rho = -rho;
  }
  return {rho, theta};
}

// Mark the nearest pixel of p(t) = (rho cos T - t sin T, rho sin T + t cos T)
// at quarter-pixel steps — a dense, parametric rasterization (deliberately
// not Bresenham, which the overlay uses).
inline offside::BinaryMask rasterize_polar_line(int w, int h, double rho, double theta) {
  offside::BinaryMask mask = offside::BinaryMask::make(w, h);
  const double c = std::cos(theta), s = std::sin(theta);
  const double reach = std::hypot(w, h) + 2.0;
  for (double t = -reach; t <= reach; t += 0.25) {
    const int x = static_cast<int>(std::lround(rho * c - t * s));
    const int y = static_cast<int>(std::lround(rho * s + t * c));
    if (x >= 0 && y >= 0 && x < w && y < h) mask.set(x, y, true);
  }
  return mask;
}

// Largest 8-connected component of a mask.
inline offside::BinaryMask largest_component(const offside::BinaryMask& mask) {
  offside::BinaryMask best = offside::BinaryMask::make(mask.width, mask.height);
  std::vector<char> seen(static_cast<std::size_t>(mask.width) * mask.height, 0);
  std::size_t best_size = 0;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.test(x, y) || seen[static_cast<std::size_t>(y) * mask.width + x]) continue;
      std::vector<std::pair<int, int>> comp;
      std::queue<std::pair<int, int>> q;
      q.push({x, y});
      seen[static_cast<std::size_t>(y) * mask.width + x] = 1;
      while (!q.empty()) {
        auto [cx, cy] = q.front();
        q.pop();
        comp.push_back({cx, cy});
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx, ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= mask.width || ny >= mask.height) continue;
            auto& flag = seen[static_cast<std::size_t>(ny) * mask.width + nx];
            if (flag || !mask.test(nx, ny)) continue;
            flag = 1;
            q.push({nx, ny});
          }
        }
      }
      if (comp.size() > best_size) {
        best_size = comp.size();
        best = offside::BinaryMask::make(mask.width, mask.height);
        for (auto [cx, cy] : comp) best.set(cx, cy, true);
      }
    }
  }
  return best;
}

// Fill interior holes: flood the background 4-connected from the border;
// anything the flood cannot reach is a hole and becomes foreground.
inline offside::BinaryMask fill_holes(const offside::BinaryMask& mask) {
  const int w = mask.width, h = mask.height;
  std::vector<char> outside(static_cast<std::size_t>(w) * h, 0);
  std::queue<std::pair<int, int>> q;
  auto push = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= w || y >= h) return;
    auto& flag = outside[static_cast<std::size_t>(y) * w + x];
    if (flag || mask.test(x, y)) return;
    flag = 1;
    q.push({x, y});
  };
  for (int x = 0; x < w; ++x) {
    push(x, 0);
    push(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    push(0, y);
    push(w - 1, y);
  }
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    push(x - 1, y);
    push(x + 1, y);
    push(x, y - 1);
    push(x, y + 1);
  }
  offside::BinaryMask out = offside::BinaryMask::make(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.set(x, y, mask.test(x, y) || !outside[static_cast<std::size_t>(y) * w + x]);
    }
  }
  return out;
}

// Random hole-free 8-connected blob (union of random disks and rectangles,
// largest component, holes filled).
inline offside::BinaryMask random_blob(std::mt19937_64& rng, int w, int h) {
  offside::BinaryMask mask = offside::BinaryMask::make(w, h);
  const int shapes = uniform_int(rng, 1, 4);
  for (int s = 0; s < shapes; ++s) {
    const int cx = uniform_int(rng, w / 4, 3 * w / 4);
    const int cy = uniform_int(rng, h / 4, 3 * h / 4);
    if (rng() % 2 == 0) {
      const int r = uniform_int(rng, 2, std::max(3, std::min(w, h) / 4));
      for (int y = std::max(0, cy - r); y <= std::min(h - 1, cy + r); ++y) {
        for (int x = std::max(0, cx - r); x <= std::min(w - 1, cx + r); ++x) {
          if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) mask.set(x, y, true);
        }
      }
    } else {
      const int hw = uniform_int(rng, 2, std::max(3, w / 4));
      const int hh = uniform_int(rng, 2, std::max(3, h / 4));
      for (int y = std::max(0, cy - hh); y <= std::min(h - 1, cy + hh); ++y) {
        for (int x = std::max(0, cx - hw); x <= std::min(w - 1, cx + hw); ++x) {
          mask.set(x, y, true);
        }
      }
    }
  }
  return fill_holes(largest_component(mask));
}

// Independent re-derivation of the vanishing-point RANSAC contract. Returns
// the estimate plus the best inlier set so containment can be checked.
struct RansacRef {
  offside::VanishingPoint vp;
  std::vector<offside::Vec2> best_inliers;
};

inline RansacRef ransac_reference(const std::vector<offside::Vec2>& points,
                                  const offside::RansacParams& params) {
  using offside::Vec2;
  const std::size_t n = points.size();
  RansacRef out;
  bool all_same = true;
  for (const Vec2& p : points) {
    if (!(p == points[0])) {
      all_same = false;
      break;
    }
  }
  if (all_same) {
    out.vp = {points[0].x, points[0].y, static_cast<int>(n), static_cast<int>(n)};
    out.best_inliers = points;
    return out;
  }

  std::mt19937_64 rng(params.seed);
  int best_count = -1;
  std::vector<offside::Vec2> best;
  for (int round = 0; round < params.iterations; ++round) {
    std::size_t i = 0, j = 0;
    bool found = false;
    for (int attempt = 0; attempt < 32; ++attempt) {
      i = static_cast<std::size_t>(rng() % n);
      j = static_cast<std::size_t>(rng() % n);
      if (i != j && !(points[i] == points[j])) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    const offside::HomogLine model = offside::line_through(points[i], points[j]);
    std::vector<offside::Vec2> inliers;
    for (const Vec2& p : points) {
      if (offside::point_line_distance(p, model) <= params.inlier_dist) inliers.push_back(p);
    }
    if (static_cast<int>(inliers.size()) > best_count) {
      best_count = static_cast<int>(inliers.size());
      best = inliers;
    }
    if (best_count >= 0 &&
        static_cast<double>(best_count) / static_cast<double>(n) >= params.early_exit_frac) {
      break;
    }
  }
  if (best_count < 2) best = points;  // collapsed cloud: no usable 2-point model

  double sx = 0.0, sy = 0.0;
  for (const Vec2& p : best) {
    sx += p.x;
    sy += p.y;
  }
  out.vp = {sx / static_cast<double>(best.size()), sy / static_cast<double>(best.size()),
            static_cast<int>(best.size()), static_cast<int>(n)};
  out.best_inliers = std::move(best);
  return out;
}

}  // namespace oracle

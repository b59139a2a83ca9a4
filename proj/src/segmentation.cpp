#include "offside/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "offside/kernels/kernels.hpp"

namespace offside {

namespace {

// Moore neighborhood in clockwise order (screen coordinates, y down),
// starting at West.
constexpr int kDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int direction_between(int from_x, int from_y, int to_x, int to_y) {
  const int dx = to_x - from_x;
  const int dy = to_y - from_y;
  for (int d = 0; d < 8; ++d) {
    if (kDx[d] == dx && kDy[d] == dy) return d;
  }
  return -1;
}

double shoelace_area(const std::vector<std::array<int, 2>>& pts) {
  long long twice = 0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % n];
    twice += static_cast<long long>(p[0]) * q[1] - static_cast<long long>(q[0]) * p[1];
  }
  return std::abs(static_cast<double>(twice)) / 2.0;
}

// Border following from the component's topmost-leftmost pixel, whose West
// neighbor is guaranteed background. A first clockwise sweep from West finds
// the border's final pixel i1; the border is then walked counterclockwise
// (in y-down coordinates) and terminates when about to retrace the edge
// i1 -> start, so pinched shapes that revisit the start pixel mid-trace do
// not stop early.
std::vector<std::array<int, 2>> trace_boundary(const BinaryMask& mask, int sx, int sy) {
  auto fg = [&mask](int x, int y) {
    return x >= 0 && x < mask.width && y >= 0 && y < mask.height && mask.test(x, y);
  };

  std::vector<std::array<int, 2>> points;
  points.push_back({sx, sy});

  int d1 = -1;
  for (int d = 0; d < 8; ++d) {
    if (fg(sx + kDx[d], sy + kDy[d])) {
      d1 = d;
      break;
    }
  }
  if (d1 >= 0) {
    const int i1x = sx + kDx[d1];
    const int i1y = sy + kDy[d1];
    int prev_x = i1x, prev_y = i1y;
    int cur_x = sx, cur_y = sy;
    const std::size_t cap = 4 * mask.bits.size() + 8;
    while (points.size() < cap) {
      const int back = direction_between(cur_x, cur_y, prev_x, prev_y);
      int next = -1;
      for (int k = 1; k <= 8; ++k) {
        const int d = (back - k + 16) % 8;
        if (fg(cur_x + kDx[d], cur_y + kDy[d])) {
          next = d;
          break;
        }
      }
      const int nx = cur_x + kDx[next];
      const int ny = cur_y + kDy[next];
      if (nx == sx && ny == sy && cur_x == i1x && cur_y == i1y) break;
      points.push_back({nx, ny});
      prev_x = cur_x;
      prev_y = cur_y;
      cur_x = nx;
      cur_y = ny;
    }
  }
  while (points.size() < 3) points.push_back(points.back());
  return points;
}

}  // namespace

BinaryMask green_mask(const Raster& frame, const GreenRange& range) {
  if (frame.channels != 3) raise(Errc::ChannelMismatch, "green_mask expects a 3-channel frame");
  kernels::HsvRange kr;
  kr.h_lo = range.h_lo;
  kr.h_hi = range.h_hi;
  kr.s_lo = range.s_lo;
  kr.s_hi = range.s_hi;
  kr.v_lo = range.v_lo;
  kr.v_hi = range.v_hi;
  kr.wrap = range.h_lo > range.h_hi;
  BinaryMask mask = BinaryMask::make(frame.width, frame.height);
  kernels::ops().hsv_in_range(frame.data.data(), frame.pixel_count(), kr, mask.bits.data());
  return mask;
}

std::vector<Contour> external_contours(const BinaryMask& mask) {
  std::vector<Contour> contours;
  std::vector<std::uint8_t> seen(mask.bits.size(), 0);
  std::queue<std::pair<int, int>> frontier;

  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * mask.width + x;
      if (!mask.bits[idx] || seen[idx]) continue;

      // First pixel of a new component in row-major order: its trace start.
      Contour c;
      c.points = trace_boundary(mask, x, y);
      c.area = shoelace_area(c.points);
      contours.push_back(std::move(c));

      // Mark the whole 8-connected component visited.
      seen[idx] = 1;
      frontier.push({x, y});
      while (!frontier.empty()) {
        const auto [px, py] = frontier.front();
        frontier.pop();
        for (int d = 0; d < 8; ++d) {
          const int nx = px + kDx[d];
          const int ny = py + kDy[d];
          if (nx < 0 || nx >= mask.width || ny < 0 || ny >= mask.height) continue;
          const std::size_t nidx = static_cast<std::size_t>(ny) * mask.width + nx;
          if (mask.bits[nidx] && !seen[nidx]) {
            seen[nidx] = 1;
            frontier.push({nx, ny});
          }
        }
      }
    }
  }
  return contours;
}

BinaryMask fill_contours(const std::vector<Contour>& contours, double min_area_frac, int width,
                         int height) {
  BinaryMask mask = BinaryMask::make(width, height);
  const double threshold = min_area_frac * static_cast<double>(width) * height;
  std::vector<std::vector<int>> crossings(static_cast<std::size_t>(std::max(height, 0)));

  for (const Contour& c : contours) {
    if (c.area < threshold || c.points.empty()) continue;

    for (auto& row : crossings) row.clear();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const auto& p = c.points[i];
      const auto& q = c.points[(i + 1) % c.points.size()];
      if (p[0] >= 0 && p[0] < width && p[1] >= 0 && p[1] < height) mask.set(p[0], p[1], true);
      if (p[1] == q[1]) continue;
      // Boundary steps are 8-adjacent, so each non-horizontal edge spans
      // exactly one scanline: the one through its lower-y endpoint.
      const auto& lower = p[1] < q[1] ? p : q;
      if (lower[1] >= 0 && lower[1] < height) crossings[lower[1]].push_back(lower[0]);
    }

    for (int y = 0; y < height; ++y) {
      auto& xs = crossings[y];
      if (xs.empty()) continue;
      std::sort(xs.begin(), xs.end());
      for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
        const int lo = std::max(xs[i] + 1, 0);
        const int hi = std::min(xs[i + 1] - 1, width - 1);
        for (int x = lo; x <= hi; ++x) mask.set(x, y, true);
      }
    }
  }
  return mask;
}

Raster apply_mask(const Raster& frame, const BinaryMask& mask) {
  if (frame.width != mask.width || frame.height != mask.height) {
    raise(Errc::DimensionMismatch, "apply_mask frame/mask dimensions differ");
  }
  Raster out = Raster::make(frame.width, frame.height, frame.channels);
  kernels::ops().apply_mask(frame.data.data(), mask.bits.data(), frame.pixel_count(),
                            frame.channels, out.data.data());
  return out;
}

}  // namespace offside

#include <cmath>
#include <numbers>
#include <queue>

#include "offside/filters.hpp"
#include "offside/line_detect.hpp"

namespace offside {

namespace {

// Quantize a gradient direction to one of 4 bins: 0=0deg (x), 1=45deg,
// 2=90deg (y), 3=135deg.
int direction_bin(float gx, float gy) {
  float angle = std::atan2(gy, gx);
  if (angle < 0.0f) angle += std::numbers::pi_v<float>;
  int bin = static_cast<int>(std::lround(angle / (std::numbers::pi_v<float> / 4.0f))) % 4;
  return bin;
}

// The two neighbors along each direction bin, ordered so the lower-index
// (left/up) neighbor comes first; with the > / >= tie-break below this keeps
// exactly the left (or top) pixel of an equal two-pixel gradient response.
constexpr int kNbr[4][2][2] = {
    {{-1, 0}, {1, 0}},    // 0 deg: left, right
    {{-1, -1}, {1, 1}},   // 45 deg: up-left, down-right
    {{0, -1}, {0, 1}},    // 90 deg: up, down
    {{1, -1}, {-1, 1}},   // 135 deg: up-right, down-left
};

}  // namespace

namespace detail {

EdgeMap hysteresis(const std::vector<float>& mag, int width, int height, float t_low,
                   float t_high) {
  EdgeMap out = EdgeMap::make(width, height);
  std::queue<std::pair<int, int>> frontier;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (mag[static_cast<std::size_t>(y) * width + x] >= t_high && !out.test(x, y)) {
        out.set(x, y, true);
        frontier.push({x, y});
        while (!frontier.empty()) {
          const auto [px, py] = frontier.front();
          frontier.pop();
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              const int nx = px + dx;
              const int ny = py + dy;
              if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
              if (out.test(nx, ny)) continue;
              if (mag[static_cast<std::size_t>(ny) * width + nx] >= t_low) {
                out.set(nx, ny, true);
                frontier.push({nx, ny});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

EdgeMap canny(const Raster& img, const CannyParams& params) {
  if (params.t_low < 0.0f || params.t_low > params.t_high) {
    raise(Errc::BadThresholds, "canny requires 0 <= t_low <= t_high");
  }
  const Raster blurred = gaussian_blur(img, params.sigma);
  const GradientField g = sobel(blurred);

  // Non-maximum suppression: a pixel survives iff its magnitude is strictly
  // greater than the first neighbor along its quantized direction and >= the
  // second, which thins an equal two-pixel step response to a single pixel.
  const int w = g.width, h = g.height;
  std::vector<float> thin(static_cast<std::size_t>(w) * h, 0.0f);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      const float m = g.magnitude[i];
      if (m == 0.0f) continue;
      const int bin = direction_bin(g.gx[i], g.gy[i]);
      float nbr[2];
      for (int k = 0; k < 2; ++k) {
        const int nx = x + kNbr[bin][k][0];
        const int ny = y + kNbr[bin][k][1];
        nbr[k] = (nx < 0 || nx >= w || ny < 0 || ny >= h)
                     ? 0.0f
                     : g.magnitude[static_cast<std::size_t>(ny) * w + nx];
      }
      if (m > nbr[0] && m >= nbr[1]) thin[i] = m;
    }
  }
  return detail::hysteresis(thin, w, h, params.t_low, params.t_high);
}

}  // namespace offside

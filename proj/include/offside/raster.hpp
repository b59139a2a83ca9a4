#pragma once

#include <cstddef>
#include <vector>

#include "offside/error.hpp"

namespace offside {

/// Row-major pixel grid with 1 (gray) or 3 (RGB) interleaved channels.
/// Every sample lives in [0,1]; 8-bit conversion happens only at file I/O.
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> data;

  static Raster make(int width, int height, int channels, float fill = 0.0f) {
    Raster r;
    r.width = width;
    r.height = height;
    r.channels = channels;
    r.data.assign(static_cast<std::size_t>(width) * height * channels, fill);
    return r;
  }

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }

  float& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
  float at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  bool same_shape(const Raster& other) const {
    return width == other.width && height == other.height && channels == other.channels;
  }
};

/// Signed per-pixel gradients from a 3x3 Sobel pass. gx/gy/magnitude are not
/// range-limited; direction is atan2(gy, gx) in (-pi, pi].
struct GradientField {
  int width = 0;
  int height = 0;
  std::vector<float> gx;
  std::vector<float> gy;
  std::vector<float> magnitude;
  std::vector<float> direction;
};

}  // namespace offside

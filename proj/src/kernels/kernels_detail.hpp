#pragma once

// Canonical per-pixel formulas shared by every kernel backend. SIMD variants
// vectorize across pixels but keep the per-pixel operation order exactly as
// written here, so outputs stay bit-identical (the project builds with
// -ffp-contract=off).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "offside/kernels/kernels.hpp"

namespace offside::kernels::detail {

struct HsvPixel {
  float h_deg;  // [0, 360)
  float s;
  float v;
};

inline HsvPixel hsv_from_rgb(float r, float g, float b) {
  const float v = std::max(r, std::max(g, b));
  const float lo = std::min(r, std::min(g, b));
  const float delta = v - lo;
  const float s = v > 0.0f ? delta / v : 0.0f;
  float h6 = 0.0f;
  if (delta > 0.0f) {
    if (v == r) {
      h6 = (g - b) / delta;
    } else if (v == g) {
      h6 = (b - r) / delta + 2.0f;
    } else {
      h6 = (r - g) / delta + 4.0f;
    }
  }
  float h = h6 * 60.0f;
  if (h < 0.0f) h += 360.0f;
  if (h >= 360.0f) h -= 360.0f;
  return {h, s, v};
}

inline bool hsv_range_test(float h_deg, float s, float v, const HsvRange& rg) {
  const bool in_h =
      rg.wrap ? (h_deg >= rg.h_lo || h_deg <= rg.h_hi) : (h_deg >= rg.h_lo && h_deg <= rg.h_hi);
  return in_h && s >= rg.s_lo && s <= rg.s_hi && v >= rg.v_lo && v <= rg.v_hi;
}

inline int clamp_coord(int v, int n) { return v < 0 ? 0 : (v >= n ? n - 1 : v); }

inline float conv_h_pixel(const float* src, int w, int y, int x, const float* taps, int radius) {
  const float* row = src + static_cast<std::size_t>(y) * w;
  float acc = 0.0f;
  for (int j = -radius; j <= radius; ++j) {
    acc += taps[j + radius] * row[clamp_coord(x + j, w)];
  }
  return acc;
}

inline float conv_v_pixel(const float* src, int w, int h, int y, int x, const float* taps,
                          int radius) {
  float acc = 0.0f;
  for (int j = -radius; j <= radius; ++j) {
    acc += taps[j + radius] * src[static_cast<std::size_t>(clamp_coord(y + j, h)) * w + x];
  }
  return acc;
}

struct SobelPixel {
  float gx;
  float gy;
};

inline SobelPixel sobel_pixel(const float* src, int w, int h, int x, int y) {
  const int xl = clamp_coord(x - 1, w), xr = clamp_coord(x + 1, w);
  const int yt = clamp_coord(y - 1, h), yb = clamp_coord(y + 1, h);
  const float tl = src[static_cast<std::size_t>(yt) * w + xl];
  const float tm = src[static_cast<std::size_t>(yt) * w + x];
  const float tr = src[static_cast<std::size_t>(yt) * w + xr];
  const float ml = src[static_cast<std::size_t>(y) * w + xl];
  const float mr = src[static_cast<std::size_t>(y) * w + xr];
  const float bl = src[static_cast<std::size_t>(yb) * w + xl];
  const float bm = src[static_cast<std::size_t>(yb) * w + x];
  const float br = src[static_cast<std::size_t>(yb) * w + xr];
  SobelPixel p;
  p.gx = (tr - tl) + 2.0f * (mr - ml) + (br - bl);
  p.gy = (bl - tl) + 2.0f * (bm - tm) + (br - tr);
  return p;
}

}  // namespace offside::kernels::detail

// Scalar reference backend. Every other backend must match these outputs
// bit for bit.

#include "kernels_detail.hpp"

namespace offside::kernels {
namespace {

using namespace detail;

void hsv_planes_scalar(const float* rgb, std::size_t n, float* h, float* s, float* v) {
  for (std::size_t i = 0; i < n; ++i) {
    const HsvPixel p = hsv_from_rgb(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
    h[i] = p.h_deg / 360.0f;
    s[i] = p.s;
    v[i] = p.v;
  }
}

void conv_h_scalar(const float* src, int w, int h, const float* taps, int radius, float* dst) {
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      dst[static_cast<std::size_t>(y) * w + x] = conv_h_pixel(src, w, y, x, taps, radius);
    }
  }
}

void conv_v_scalar(const float* src, int w, int h, const float* taps, int radius, float* dst) {
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      dst[static_cast<std::size_t>(y) * w + x] = conv_v_pixel(src, w, h, y, x, taps, radius);
    }
  }
}

void sobel3_scalar(const float* src, int w, int h, float* gx, float* gy) {
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const SobelPixel p = sobel_pixel(src, w, h, x, y);
      gx[static_cast<std::size_t>(y) * w + x] = p.gx;
      gy[static_cast<std::size_t>(y) * w + x] = p.gy;
    }
  }
}

void magnitude_scalar(const float* gx, const float* gy, std::size_t n, float* mag) {
  for (std::size_t i = 0; i < n; ++i) {
    mag[i] = std::sqrt(gx[i] * gx[i] + gy[i] * gy[i]);
  }
}

void hsv_in_range_scalar(const float* rgb, std::size_t n, const HsvRange& range,
                         std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const HsvPixel p = hsv_from_rgb(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
    out[i] = hsv_range_test(p.h_deg, p.s, p.v, range) ? 1 : 0;
  }
}

void apply_mask_scalar(const float* src, const std::uint8_t* mask, std::size_t n, int channels,
                       float* dst) {
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < channels; ++c) {
      dst[i * channels + c] = mask[i] ? src[i * channels + c] : 0.0f;
    }
  }
}

}  // namespace

namespace detail {
const Ops scalar_ops = {
    hsv_planes_scalar, conv_h_scalar,      conv_v_scalar,     sobel3_scalar,
    magnitude_scalar,  hsv_in_range_scalar, apply_mask_scalar,
};
}  // namespace detail

}  // namespace offside::kernels

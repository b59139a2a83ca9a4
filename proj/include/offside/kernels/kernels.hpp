#pragma once

#include <cstddef>
#include <cstdint>

namespace offside::kernels {

/// HSV interval test parameters, hue in degrees. `wrap` marks a hue interval
/// that passes through 0 (h_lo > h_hi).
struct HsvRange {
  float h_lo, h_hi;
  float s_lo, s_hi;
  float v_lo, v_hi;
  bool wrap;
};

/// The data-parallel inner loops of the pipeline. Each entry has a scalar
/// reference implementation and may have SIMD variants; all variants are
/// required to produce bit-identical output (enforced by the equivalence
/// tests, enabled by building with -ffp-contract=off).
struct Ops {
  // Interleaved RGB -> H/S/V planes. h is rescaled to [0,1] (degrees / 360).
  void (*hsv_planes)(const float* rgb, std::size_t n, float* h, float* s, float* v);

  // 1-D convolution passes with clamp-to-border replication. taps has
  // 2*radius+1 entries.
  void (*conv_h)(const float* src, int w, int h, const float* taps, int radius, float* dst);
  void (*conv_v)(const float* src, int w, int h, const float* taps, int radius, float* dst);

  // 3x3 Sobel, clamp-to-border replication.
  void (*sobel3)(const float* src, int w, int h, float* gx, float* gy);

  // mag[i] = sqrt(gx[i]^2 + gy[i]^2)
  void (*magnitude)(const float* gx, const float* gy, std::size_t n, float* mag);

  // Interleaved RGB -> 0/1 byte per pixel, set iff the pixel's HSV lies in
  // all three intervals.
  void (*hsv_in_range)(const float* rgb, std::size_t n, const HsvRange& range, std::uint8_t* out);

  // dst = mask ? src : 0, one mask byte per pixel, `channels` samples each.
  void (*apply_mask)(const float* src, const std::uint8_t* mask, std::size_t n, int channels,
                     float* dst);
};

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);

/// Active dispatch table. Defaults to the widest backend this CPU supports.
const Ops& ops();

Backend active_backend();

/// Force a backend (tests, benchmarking). Returns false if unsupported on
/// this CPU. Not safe to call while pipeline work is in flight.
bool select_backend(Backend b);

bool avx2_supported();

namespace detail {
extern const Ops scalar_ops;
#if defined(OFFSIDE_HAVE_AVX2)
extern const Ops avx2_ops;
#endif
}  // namespace detail

}  // namespace offside::kernels

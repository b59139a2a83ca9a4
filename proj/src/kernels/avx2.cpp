// AVX2 backend. Vectorizes across pixels; per-lane operation order mirrors
// kernels_detail.hpp exactly so results are bit-identical to the scalar
// reference (no FMA, division and sqrt are IEEE single-rounded per lane).

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace offside::kernels {
namespace {

using namespace detail;

struct HsvVec {
  __m256 h_deg;
  __m256 s;
  __m256 v;
};

inline HsvVec hsv_from_rgb_vec(__m256 r, __m256 g, __m256 b) {
  const __m256 zero = _mm256_setzero_ps();
  const __m256 v = _mm256_max_ps(r, _mm256_max_ps(g, b));
  const __m256 lo = _mm256_min_ps(r, _mm256_min_ps(g, b));
  const __m256 delta = _mm256_sub_ps(v, lo);

  const __m256 v_pos = _mm256_cmp_ps(v, zero, _CMP_GT_OQ);
  const __m256 s = _mm256_blendv_ps(zero, _mm256_div_ps(delta, v), v_pos);

  const __m256 hr = _mm256_div_ps(_mm256_sub_ps(g, b), delta);
  const __m256 hg = _mm256_add_ps(_mm256_div_ps(_mm256_sub_ps(b, r), delta), _mm256_set1_ps(2.0f));
  const __m256 hb = _mm256_add_ps(_mm256_div_ps(_mm256_sub_ps(r, g), delta), _mm256_set1_ps(4.0f));

  const __m256 is_r = _mm256_cmp_ps(v, r, _CMP_EQ_OQ);
  const __m256 is_g = _mm256_andnot_ps(is_r, _mm256_cmp_ps(v, g, _CMP_EQ_OQ));
  __m256 h6 = _mm256_blendv_ps(hb, hg, is_g);
  h6 = _mm256_blendv_ps(h6, hr, is_r);
  h6 = _mm256_blendv_ps(zero, h6, _mm256_cmp_ps(delta, zero, _CMP_GT_OQ));

  __m256 h = _mm256_mul_ps(h6, _mm256_set1_ps(60.0f));
  const __m256 neg = _mm256_cmp_ps(h, zero, _CMP_LT_OQ);
  h = _mm256_blendv_ps(h, _mm256_add_ps(h, _mm256_set1_ps(360.0f)), neg);
  const __m256 high = _mm256_cmp_ps(h, _mm256_set1_ps(360.0f), _CMP_GE_OQ);
  h = _mm256_blendv_ps(h, _mm256_sub_ps(h, _mm256_set1_ps(360.0f)), high);
  return {h, s, v};
}

inline void load_rgb(const float* rgb, std::size_t i, __m256& r, __m256& g, __m256& b) {
  const __m256i idx = _mm256_setr_epi32(0, 3, 6, 9, 12, 15, 18, 21);
  const float* base = rgb + 3 * i;
  r = _mm256_i32gather_ps(base, idx, 4);
  g = _mm256_i32gather_ps(base + 1, idx, 4);
  b = _mm256_i32gather_ps(base + 2, idx, 4);
}

void hsv_planes_avx2(const float* rgb, std::size_t n, float* h, float* s, float* v) {
  const __m256 inv360 = _mm256_set1_ps(360.0f);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 r, g, b;
    load_rgb(rgb, i, r, g, b);
    const HsvVec p = hsv_from_rgb_vec(r, g, b);
    _mm256_storeu_ps(h + i, _mm256_div_ps(p.h_deg, inv360));
    _mm256_storeu_ps(s + i, p.s);
    _mm256_storeu_ps(v + i, p.v);
  }
  for (; i < n; ++i) {
    const HsvPixel p = hsv_from_rgb(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
    h[i] = p.h_deg / 360.0f;
    s[i] = p.s;
    v[i] = p.v;
  }
}

void conv_h_avx2(const float* src, int w, int h, const float* taps, int radius, float* dst) {
  for (int y = 0; y < h; ++y) {
    const float* row = src + static_cast<std::size_t>(y) * w;
    float* out = dst + static_cast<std::size_t>(y) * w;
    int x = 0;
    for (; x < radius && x < w; ++x) out[x] = conv_h_pixel(src, w, y, x, taps, radius);
    for (; x + 7 <= w - 1 - radius; x += 8) {
      __m256 acc = _mm256_setzero_ps();
      for (int j = -radius; j <= radius; ++j) {
        const __m256 t = _mm256_set1_ps(taps[j + radius]);
        acc = _mm256_add_ps(acc, _mm256_mul_ps(t, _mm256_loadu_ps(row + x + j)));
      }
      _mm256_storeu_ps(out + x, acc);
    }
    for (; x < w; ++x) out[x] = conv_h_pixel(src, w, y, x, taps, radius);
  }
}

void conv_v_avx2(const float* src, int w, int h, const float* taps, int radius, float* dst) {
  for (int y = 0; y < h; ++y) {
    float* out = dst + static_cast<std::size_t>(y) * w;
    int x = 0;
    for (; x + 8 <= w; x += 8) {
      __m256 acc = _mm256_setzero_ps();
      for (int j = -radius; j <= radius; ++j) {
        const float* row = src + static_cast<std::size_t>(clamp_coord(y + j, h)) * w;
        const __m256 t = _mm256_set1_ps(taps[j + radius]);
        acc = _mm256_add_ps(acc, _mm256_mul_ps(t, _mm256_loadu_ps(row + x)));
      }
      _mm256_storeu_ps(out + x, acc);
    }
    for (; x < w; ++x) out[x] = conv_v_pixel(src, w, h, y, x, taps, radius);
  }
}

void sobel3_avx2(const float* src, int w, int h, float* gx, float* gy) {
  const __m256 two = _mm256_set1_ps(2.0f);
  for (int y = 0; y < h; ++y) {
    const float* rt = src + static_cast<std::size_t>(clamp_coord(y - 1, h)) * w;
    const float* rm = src + static_cast<std::size_t>(y) * w;
    const float* rb = src + static_cast<std::size_t>(clamp_coord(y + 1, h)) * w;
    float* ox = gx + static_cast<std::size_t>(y) * w;
    float* oy = gy + static_cast<std::size_t>(y) * w;
    int x = 0;
    for (; x < 1 && x < w; ++x) {
      const SobelPixel p = sobel_pixel(src, w, h, x, y);
      ox[x] = p.gx;
      oy[x] = p.gy;
    }
    for (; x + 7 <= w - 2; x += 8) {
      const __m256 tl = _mm256_loadu_ps(rt + x - 1), tm = _mm256_loadu_ps(rt + x),
                   tr = _mm256_loadu_ps(rt + x + 1);
      const __m256 ml = _mm256_loadu_ps(rm + x - 1), mr = _mm256_loadu_ps(rm + x + 1);
      const __m256 bl = _mm256_loadu_ps(rb + x - 1), bm = _mm256_loadu_ps(rb + x),
                   br = _mm256_loadu_ps(rb + x + 1);
      const __m256 vgx = _mm256_add_ps(
          _mm256_add_ps(_mm256_sub_ps(tr, tl), _mm256_mul_ps(two, _mm256_sub_ps(mr, ml))),
          _mm256_sub_ps(br, bl));
      const __m256 vgy = _mm256_add_ps(
          _mm256_add_ps(_mm256_sub_ps(bl, tl), _mm256_mul_ps(two, _mm256_sub_ps(bm, tm))),
          _mm256_sub_ps(br, tr));
      _mm256_storeu_ps(ox + x, vgx);
      _mm256_storeu_ps(oy + x, vgy);
    }
    for (; x < w; ++x) {
      const SobelPixel p = sobel_pixel(src, w, h, x, y);
      ox[x] = p.gx;
      oy[x] = p.gy;
    }
  }
}

void magnitude_avx2(const float* gx, const float* gy, std::size_t n, float* mag) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 x = _mm256_loadu_ps(gx + i);
    const __m256 y = _mm256_loadu_ps(gy + i);
    const __m256 m =
        _mm256_sqrt_ps(_mm256_add_ps(_mm256_mul_ps(x, x), _mm256_mul_ps(y, y)));
    _mm256_storeu_ps(mag + i, m);
  }
  for (; i < n; ++i) mag[i] = std::sqrt(gx[i] * gx[i] + gy[i] * gy[i]);
}

void hsv_in_range_avx2(const float* rgb, std::size_t n, const HsvRange& range, std::uint8_t* out) {
  const __m256 h_lo = _mm256_set1_ps(range.h_lo), h_hi = _mm256_set1_ps(range.h_hi);
  const __m256 s_lo = _mm256_set1_ps(range.s_lo), s_hi = _mm256_set1_ps(range.s_hi);
  const __m256 v_lo = _mm256_set1_ps(range.v_lo), v_hi = _mm256_set1_ps(range.v_hi);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 r, g, b;
    load_rgb(rgb, i, r, g, b);
    const HsvVec p = hsv_from_rgb_vec(r, g, b);
    const __m256 ge_lo = _mm256_cmp_ps(p.h_deg, h_lo, _CMP_GE_OQ);
    const __m256 le_hi = _mm256_cmp_ps(p.h_deg, h_hi, _CMP_LE_OQ);
    __m256 in_h = range.wrap ? _mm256_or_ps(ge_lo, le_hi) : _mm256_and_ps(ge_lo, le_hi);
    __m256 ok = _mm256_and_ps(in_h, _mm256_cmp_ps(p.s, s_lo, _CMP_GE_OQ));
    ok = _mm256_and_ps(ok, _mm256_cmp_ps(p.s, s_hi, _CMP_LE_OQ));
    ok = _mm256_and_ps(ok, _mm256_cmp_ps(p.v, v_lo, _CMP_GE_OQ));
    ok = _mm256_and_ps(ok, _mm256_cmp_ps(p.v, v_hi, _CMP_LE_OQ));
    const int bits = _mm256_movemask_ps(ok);
    for (int k = 0; k < 8; ++k) out[i + k] = (bits >> k) & 1;
  }
  for (; i < n; ++i) {
    const HsvPixel p = hsv_from_rgb(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
    out[i] = hsv_range_test(p.h_deg, p.s, p.v, range) ? 1 : 0;
  }
}

void apply_mask_avx2(const float* src, const std::uint8_t* mask, std::size_t n, int channels,
                     float* dst) {
  const std::size_t samples = n * static_cast<std::size_t>(channels);
  alignas(32) std::uint32_t lane[8];
  std::size_t i = 0;
  for (; i + 8 <= samples; i += 8) {
    for (int k = 0; k < 8; ++k) lane[k] = mask[(i + k) / channels] ? 0xFFFFFFFFu : 0u;
    const __m256 m = _mm256_castsi256_ps(_mm256_load_si256(reinterpret_cast<const __m256i*>(lane)));
    _mm256_storeu_ps(dst + i, _mm256_and_ps(m, _mm256_loadu_ps(src + i)));
  }
  for (; i < samples; ++i) dst[i] = mask[i / channels] ? src[i] : 0.0f;
}

}  // namespace

namespace detail {
const Ops avx2_ops = {
    hsv_planes_avx2, conv_h_avx2,       conv_v_avx2,     sobel3_avx2,
    magnitude_avx2,  hsv_in_range_avx2, apply_mask_avx2,
};
}  // namespace detail

}  // namespace offside::kernels

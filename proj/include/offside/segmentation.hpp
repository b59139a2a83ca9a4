#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "offside/raster.hpp"

namespace offside {

/// HSV interval for pitch-green pixels. Hue in degrees; h_lo > h_hi means the
/// interval wraps through 0.
struct GreenRange {
  float h_lo = 70.0f;
  float h_hi = 170.0f;
  float s_lo = 0.25f;
  float s_hi = 1.0f;
  float v_lo = 0.15f;
  float v_hi = 1.0f;
};

/// One boolean per pixel, stored as bytes (0/1).
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  static BinaryMask make(int width, int height, bool fill = false) {
    BinaryMask m;
    m.width = width;
    m.height = height;
    m.bits.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
    return m;
  }

  bool test(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }

  std::size_t count() const {
    return std::accumulate(bits.begin(), bits.end(), std::size_t{0},
                           [](std::size_t acc, std::uint8_t b) { return acc + (b != 0); });
  }
};

/// Closed outer boundary of one 8-connected foreground component, plus its
/// shoelace area. Components of 1-2 pixels repeat the start point so the
/// trace always holds at least 3 entries.
struct Contour {
  std::vector<std::array<int, 2>> points;
  double area = 0.0;
};

/// Mask true iff the pixel's HSV lies inside all three intervals (hue tested
/// with wraparound).
BinaryMask green_mask(const Raster& frame, const GreenRange& range);

/// Outer boundaries of 8-connected foreground components (holes ignored),
/// ordered by topmost-leftmost start pixel.
std::vector<Contour> external_contours(const BinaryMask& mask);

/// Fill each contour whose area is at least min_area_frac * (width*height):
/// scanline even-odd interior plus the boundary pixels themselves.
BinaryMask fill_contours(const std::vector<Contour>& contours, double min_area_frac, int width,
                         int height);

/// Keep pixels where the mask is set, zero the rest.
Raster apply_mask(const Raster& frame, const BinaryMask& mask);

}  // namespace offside

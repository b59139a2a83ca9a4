#pragma once

#include <tuple>

#include "offside/raster.hpp"

namespace offside {

/// Hexcone HSV. h in degrees [0,360); achromatic pixels (s == 0) report h = 0.
struct ColorHSV {
  float h = 0.0f;
  float s = 0.0f;
  float v = 0.0f;
};

ColorHSV rgb_to_hsv(float r, float g, float b);

/// Splits an RGB frame into H/S/V planes. The hue plane is rescaled to [0,1]
/// (degrees / 360) so it obeys the Raster sample range.
/// Throws ChannelMismatch if the frame is not 3-channel.
std::tuple<Raster, Raster, Raster> hsv_planes(const Raster& frame);

}  // namespace offside

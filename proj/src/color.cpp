#include "offside/color.hpp"

#include "offside/kernels/kernels.hpp"
#include "kernels/kernels_detail.hpp"

namespace offside {

ColorHSV rgb_to_hsv(float r, float g, float b) {
  const kernels::detail::HsvPixel p = kernels::detail::hsv_from_rgb(r, g, b);
  return {p.h_deg, p.s, p.v};
}

std::tuple<Raster, Raster, Raster> hsv_planes(const Raster& frame) {
  if (frame.channels != 3) {
    raise(Errc::ChannelMismatch, "hsv_planes expects a 3-channel frame");
  }
  Raster h = Raster::make(frame.width, frame.height, 1);
  Raster s = Raster::make(frame.width, frame.height, 1);
  Raster v = Raster::make(frame.width, frame.height, 1);
  kernels::ops().hsv_planes(frame.data.data(), frame.pixel_count(), h.data.data(), s.data.data(),
                            v.data.data());
  return {std::move(h), std::move(s), std::move(v)};
}

}  // namespace offside

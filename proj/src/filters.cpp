#include "offside/filters.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "offside/kernels/kernels.hpp"

namespace offside {

namespace {

std::vector<float> gaussian_taps(double sigma, int radius) {
  std::vector<double> raw(2 * radius + 1);
  double sum = 0.0;
  for (int j = -radius; j <= radius; ++j) {
    raw[j + radius] = std::exp(-(static_cast<double>(j) * j) / (2.0 * sigma * sigma));
    sum += raw[j + radius];
  }
  std::vector<float> taps(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    taps[i] = static_cast<float>(raw[i] / sum);
  }
  return taps;
}

}  // namespace

Raster gaussian_blur(const Raster& img, double sigma) {
  if (sigma < 0.0) raise(Errc::NegativeSigma, "gaussian_blur sigma must be >= 0");
  if (img.channels != 1) raise(Errc::ChannelMismatch, "gaussian_blur expects a 1-channel image");
  if (sigma == 0.0) return img;

  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  const std::vector<float> taps = gaussian_taps(sigma, radius);

  Raster tmp = Raster::make(img.width, img.height, 1);
  Raster out = Raster::make(img.width, img.height, 1);
  const auto& k = kernels::ops();
  k.conv_h(img.data.data(), img.width, img.height, taps.data(), radius, tmp.data.data());
  k.conv_v(tmp.data.data(), img.width, img.height, taps.data(), radius, out.data.data());
  return out;
}

GradientField sobel(const Raster& img) {
  if (img.channels != 1) raise(Errc::ChannelMismatch, "sobel expects a 1-channel image");
  if (img.width < 3 || img.height < 3) raise(Errc::ImageTooSmall, "sobel needs at least 3x3");

  GradientField g;
  g.width = img.width;
  g.height = img.height;
  const std::size_t n = img.pixel_count();
  g.gx.resize(n);
  g.gy.resize(n);
  g.magnitude.resize(n);
  g.direction.resize(n);

  const auto& k = kernels::ops();
  k.sobel3(img.data.data(), img.width, img.height, g.gx.data(), g.gy.data());
  k.magnitude(g.gx.data(), g.gy.data(), n, g.magnitude.data());
  constexpr float pi = std::numbers::pi_v<float>;
  for (std::size_t i = 0; i < n; ++i) {
    float d = std::atan2(g.gy[i], g.gx[i]);
    if (d <= -pi) d = pi;  // fold atan2's -pi onto +pi so direction is in (-pi, pi]
    g.direction[i] = d;
  }
  return g;
}

}  // namespace offside

#pragma once

#include "offside/raster.hpp"

namespace offside {

/// Separable Gaussian smoothing with kernel radius ceil(3*sigma) and
/// clamp-to-border replication. sigma == 0 returns the input unchanged.
/// Throws NegativeSigma.
Raster gaussian_blur(const Raster& img, double sigma);

/// 3x3 Sobel gradients with clamp-to-border replication.
/// Throws ImageTooSmall when either dimension is < 3, ChannelMismatch on
/// multi-channel input.
GradientField sobel(const Raster& img);

}  // namespace offside

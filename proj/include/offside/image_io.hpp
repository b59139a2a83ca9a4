#pragma once

#include <string>

#include "offside/raster.hpp"

namespace offside {

/// Load a PNG or binary PPM (P6) by file extension. PNG grayscale files load
/// as 1-channel rasters, everything else as 3-channel RGB; PPM is always RGB.
/// 8-bit samples map to value/255.
Raster load_image(const std::string& path);

/// Save as PNG or binary PPM (P6, maxval 255) by file extension. Samples are
/// clamped to [0,1] and quantized with round(value*255). A 1-channel raster
/// saved as PPM is replicated across RGB.
void save_image(const std::string& path, const Raster& img);

}  // namespace offside

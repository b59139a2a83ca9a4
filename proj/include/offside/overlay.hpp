#pragma once

#include "offside/config.hpp"
#include "offside/pipeline.hpp"

namespace offside {

/// Copy of `frame` (grayscale promoted to RGB) with the enabled layers
/// drawn: detected segments (cyan), virtual keypoint lines (yellow, each
/// from the vanishing point to the bottom row), the offside line (magenta),
/// keypoint markers (white crosses), and per-player verdict glyphs (red X =
/// offside, green cross = onside, gray box = not applicable). All drawing is
/// clipped to the frame; with every toggle off the pixels are unchanged.
Raster draw_overlay(const Raster& frame, const FrameResult& result, const OverlayToggles& toggles);

}  // namespace offside

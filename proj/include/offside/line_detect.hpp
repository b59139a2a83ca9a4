#pragma once

#include <vector>

#include "offside/geometry.hpp"
#include "offside/raster.hpp"
#include "offside/segmentation.hpp"

namespace offside {

/// Boolean edge indicator per pixel; same layout as a segmentation mask.
using EdgeMap = BinaryMask;

struct CannyParams {
  double sigma = 1.4;
  float t_low = 0.06f;
  float t_high = 0.16f;
};

struct HoughParams {
  double rho_res = 1.0;                  // pixels per accumulator bin
  double theta_res = 3.14159265358979323846 / 180.0;  // radians per bin
  int votes_min = 120;
  double max_gap = 8.0;                  // pixels, along the line
  double min_len = 60.0;                 // pixels
};

/// rho = x*cos(theta) + y*sin(theta), theta in [0, pi). The (rho,theta) and
/// (-rho,theta+pi) aliases are canonicalized to this range.
struct PolarLine {
  double rho = 0.0;
  double theta = 0.0;
};

struct Segment {
  Vec2 p1;
  Vec2 p2;
  double angle_deg = 0.0;  // direction of (p2-p1) folded into [0,180)

  static Segment make(const Vec2& p1, const Vec2& p2);
};

/// Gaussian blur -> Sobel -> non-maximum suppression along the quantized
/// gradient direction -> double-threshold hysteresis (strong >= t_high seeds;
/// weak >= t_low kept iff 8-connected to a strong pixel).
/// Throws BadThresholds unless 0 <= t_low <= t_high.
EdgeMap canny(const Raster& img, const CannyParams& params);

/// Accumulator peaks with votes >= votes_min: cells strictly greater than
/// their 8 neighbors (plateau ties broken by lower theta bin, then lower rho
/// bin), de-duplicated within 2 rho x 2 theta bins of a stronger peak,
/// sorted by votes descending.
std::vector<PolarLine> hough_accumulate(const EdgeMap& edges, const HoughParams& params);

/// Edge pixels within 1.5 px perpendicular distance of the line, ordered by
/// projection along it; maximal runs with gaps <= max_gap, dropping runs
/// whose projected span is < min_len.
std::vector<Segment> extract_segments(const EdgeMap& edges, const PolarLine& line,
                                      const HoughParams& params);

/// Keep segments whose slope angle folded to [0,90] lies in [min_deg,max_deg]
/// (order preserved). Requires 0 <= min_deg < max_deg < 90, so an exactly
/// vertical segment is always dropped. Throws BadAngleWindow.
std::vector<Segment> filter_by_angle(const std::vector<Segment>& segments, double min_deg = 18.0,
                                     double max_deg = 89.0);

/// The unique normalized line through the segment's endpoints.
HomogLine segment_to_homog(const Segment& seg);

namespace detail {

/// Double-threshold hysteresis over a magnitude field (exposed for tests):
/// strong pixels (>= t_high) seed a flood over 8-connected weak pixels
/// (>= t_low).
EdgeMap hysteresis(const std::vector<float>& mag, int width, int height, float t_low,
                   float t_high);

}  // namespace detail

}  // namespace offside

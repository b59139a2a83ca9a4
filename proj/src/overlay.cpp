#include "offside/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace offside {

namespace {

struct Rgb {
  float r, g, b;
};

constexpr Rgb kSegmentColor{0.0f, 1.0f, 1.0f};
constexpr Rgb kVirtualColor{1.0f, 1.0f, 0.0f};
constexpr Rgb kOffsideLineColor{1.0f, 0.0f, 1.0f};
constexpr Rgb kKeypointColor{1.0f, 1.0f, 1.0f};
constexpr Rgb kOffsideGlyph{1.0f, 0.1f, 0.1f};
constexpr Rgb kOnsideGlyph{0.1f, 0.9f, 0.1f};
constexpr Rgb kNaGlyph{0.6f, 0.6f, 0.6f};

void plot(Raster& img, int x, int y, const Rgb& c) {
  if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
  const std::size_t i = img.index(x, y);
  img.data[i] = c.r;
  img.data[i + 1] = c.g;
  img.data[i + 2] = c.b;
}

// Liang-Barsky clip to the pixel-center rectangle, then integer stepping.
void draw_line(Raster& img, double x0, double y0, double x1, double y1, const Rgb& c) {
  const double xmin = 0.0, ymin = 0.0;
  const double xmax = img.width - 1.0, ymax = img.height - 1.0;
  double t0 = 0.0, t1 = 1.0;
  const double dx = x1 - x0, dy = y1 - y0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {x0 - xmin, xmax - x0, y0 - ymin, ymax - y0};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return;  // parallel and fully outside
    } else {
      const double t = q[i] / p[i];
      if (p[i] < 0.0) {
        if (t > t1) return;
        t0 = std::max(t0, t);
      } else {
        if (t < t0) return;
        t1 = std::min(t1, t);
      }
    }
  }
  const int ax = static_cast<int>(std::lround(x0 + t0 * dx));
  const int ay = static_cast<int>(std::lround(y0 + t0 * dy));
  const int bx = static_cast<int>(std::lround(x0 + t1 * dx));
  const int by = static_cast<int>(std::lround(y0 + t1 * dy));

  int x = ax, y = ay;
  const int sx = ax < bx ? 1 : -1;
  const int sy = ay < by ? 1 : -1;
  const int adx = std::abs(bx - ax);
  const int ady = std::abs(by - ay);
  int err = adx - ady;
  while (true) {
    plot(img, x, y, c);
    if (x == bx && y == by) break;
    const int e2 = 2 * err;
    if (e2 > -ady) {
      err -= ady;
      x += sx;
    }
    if (e2 < adx) {
      err += adx;
      y += sy;
    }
  }
}

void draw_cross(Raster& img, int cx, int cy, int arm, const Rgb& c) {
  for (int d = -arm; d <= arm; ++d) {
    plot(img, cx + d, cy, c);
    plot(img, cx, cy + d, c);
  }
}

void draw_x(Raster& img, int cx, int cy, int arm, const Rgb& c) {
  for (int d = -arm; d <= arm; ++d) {
    plot(img, cx + d, cy + d, c);
    plot(img, cx + d, cy - d, c);
  }
}

void draw_box(Raster& img, int cx, int cy, int half, const Rgb& c) {
  for (int d = -half; d <= half; ++d) {
    plot(img, cx + d, cy - half, c);
    plot(img, cx + d, cy + half, c);
    plot(img, cx - half, cy + d, c);
    plot(img, cx + half, cy + d, c);
  }
}

void draw_virtual(Raster& img, const VanishingPoint& vp, const VirtualLine& line, const Rgb& c) {
  const double bottom_y = img.height - 1.0;
  if (line.is_vertical) {
    draw_line(img, line.x_bottom, 0.0, line.x_bottom, bottom_y, c);
  } else {
    draw_line(img, vp.x, vp.y, line.x_bottom, bottom_y, c);
  }
}

}  // namespace

Raster draw_overlay(const Raster& frame, const FrameResult& result, const OverlayToggles& t) {
  Raster img;
  if (frame.channels == 3) {
    img = frame;
  } else {
    img = Raster::make(frame.width, frame.height, 3);
    for (std::size_t p = 0; p < frame.pixel_count(); ++p) {
      img.data[3 * p] = img.data[3 * p + 1] = img.data[3 * p + 2] = frame.data[p];
    }
  }

  if (t.segments) {
    for (const Segment& s : result.segments) {
      draw_line(img, s.p1.x, s.p1.y, s.p2.x, s.p2.y, kSegmentColor);
    }
  }

  const bool have_vp = result.verdict.vp.has_value();
  if (t.virtual_lines && have_vp) {
    for (const VirtualLine& l : result.virtual_lines) {
      draw_virtual(img, *result.verdict.vp, l, kVirtualColor);
    }
  }
  if (t.offside_line && have_vp && result.verdict.offside_line) {
    draw_virtual(img, *result.verdict.vp, *result.verdict.offside_line, kOffsideLineColor);
  }

  if (t.keypoints) {
    for (const PlayerAnnotation& p : result.filtered.players) {
      for (const Keypoint& kp : p.keypoints) {
        draw_cross(img, static_cast<int>(std::lround(kp.x)), static_cast<int>(std::lround(kp.y)),
                   3, kKeypointColor);
      }
    }
  }

  if (t.verdicts && !result.verdict.verdicts.empty()) {
    std::map<std::string, VerdictStatus> status;
    for (const PlayerVerdict& v : result.verdict.verdicts) status[v.player_id] = v.status;
    for (const PlayerAnnotation& p : result.filtered.players) {
      const auto it = status.find(p.player_id);
      if (it == status.end() || p.keypoints.empty()) continue;
      double top_y = std::numeric_limits<double>::infinity();
      double top_x = 0.0;
      for (const Keypoint& kp : p.keypoints) {
        if (kp.y < top_y) {
          top_y = kp.y;
          top_x = kp.x;
        }
      }
      const int gx = static_cast<int>(std::lround(top_x));
      const int gy = static_cast<int>(std::lround(top_y)) - 12;
      switch (it->second) {
        case VerdictStatus::Offside: draw_x(img, gx, gy, 5, kOffsideGlyph); break;
        case VerdictStatus::Onside: draw_cross(img, gx, gy, 5, kOnsideGlyph); break;
        case VerdictStatus::NotApplicable: draw_box(img, gx, gy, 3, kNaGlyph); break;
      }
    }
  }

  return img;
}

}  // namespace offside

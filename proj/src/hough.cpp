#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "offside/line_detect.hpp"

namespace offside {

namespace {

void validate(const HoughParams& p) {
  if (p.rho_res <= 0.0 || p.theta_res <= 0.0 || p.votes_min <= 0 || p.max_gap <= 0.0 ||
      p.min_len <= 0.0) {
    raise(Errc::BadThresholds, "hough parameters must be strictly positive");
  }
}

}  // namespace

Segment Segment::make(const Vec2& p1, const Vec2& p2) {
  if (p1 == p2) raise(Errc::DegenerateSegment, "segment endpoints coincide");
  Segment s;
  s.p1 = p1;
  s.p2 = p2;
  double deg = std::atan2(p2.y - p1.y, p2.x - p1.x) * 180.0 / std::numbers::pi;
  if (deg < 0.0) deg += 180.0;
  if (deg >= 180.0) deg -= 180.0;
  s.angle_deg = deg;
  return s;
}

std::vector<PolarLine> hough_accumulate(const EdgeMap& edges, const HoughParams& params) {
  validate(params);
  const int nt = static_cast<int>(std::ceil(std::numbers::pi / params.theta_res - 1e-9));
  const double diag = std::hypot(static_cast<double>(edges.width), edges.height);
  const int half = static_cast<int>(std::ceil(diag / params.rho_res));
  const int nr = 2 * half + 1;

  std::vector<double> cos_t(nt), sin_t(nt);
  for (int k = 0; k < nt; ++k) {
    cos_t[k] = std::cos(k * params.theta_res);
    sin_t[k] = std::sin(k * params.theta_res);
  }

  std::vector<int> acc(static_cast<std::size_t>(nt) * nr, 0);
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      if (!edges.test(x, y)) continue;
      for (int k = 0; k < nt; ++k) {
        const double rho = x * cos_t[k] + y * sin_t[k];
        const int r = static_cast<int>(std::lround(rho / params.rho_res)) + half;
        ++acc[static_cast<std::size_t>(k) * nr + r];
      }
    }
  }

  auto votes_at = [&](int k, int r) -> int {
    if (k < 0 || k >= nt || r < 0 || r >= nr) return -1;
    return acc[static_cast<std::size_t>(k) * nr + r];
  };

  // Local maxima: strictly greater than all 8 neighbors, except that within
  // an equal-valued plateau the lexicographically smallest (theta, rho) cell
  // is the one reported.
  struct Peak {
    int votes, k, r;
  };
  std::vector<Peak> peaks;
  for (int k = 0; k < nt; ++k) {
    for (int r = 0; r < nr; ++r) {
      const int v = votes_at(k, r);
      if (v < params.votes_min) continue;
      bool is_peak = true;
      for (int dk = -1; dk <= 1 && is_peak; ++dk) {
        for (int dr = -1; dr <= 1; ++dr) {
          if (dk == 0 && dr == 0) continue;
          const int nv = votes_at(k + dk, r + dr);
          if (nv > v || (nv == v && (dk < 0 || (dk == 0 && dr < 0)))) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.push_back({v, k, r});
    }
  }

  // Strongest first; equal votes ordered by (theta, rho) so suppression and
  // output order are deterministic.
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.votes != b.votes) return a.votes > b.votes;
    if (a.k != b.k) return a.k < b.k;
    return a.r < b.r;
  });

  // Suppress peaks within 2x2 bins of an already-accepted (stronger) peak.
  std::vector<Peak> kept;
  for (const Peak& p : peaks) {
    bool shadowed = false;
    for (const Peak& q : kept) {
      if (std::abs(p.k - q.k) <= 2 && std::abs(p.r - q.r) <= 2) {
        shadowed = true;
        break;
      }
    }
    if (!shadowed) kept.push_back(p);
  }

  std::vector<PolarLine> lines;
  lines.reserve(kept.size());
  for (const Peak& p : kept) {
    lines.push_back({(p.r - half) * params.rho_res, p.k * params.theta_res});
  }
  return lines;
}

std::vector<Segment> extract_segments(const EdgeMap& edges, const PolarLine& line,
                                      const HoughParams& params) {
  validate(params);
  const double c = std::cos(line.theta);
  const double s = std::sin(line.theta);

  // Projection along the line direction (-sin, cos), with (x,y) as tie-break
  // so the walk order is fully deterministic.
  struct OnLine {
    double t;
    int x, y;
  };
  std::vector<OnLine> pixels;
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      if (!edges.test(x, y)) continue;
      const double dist = std::abs(x * c + y * s - line.rho);
      if (dist <= 1.5) pixels.push_back({-x * s + y * c, x, y});
    }
  }
  std::sort(pixels.begin(), pixels.end(), [](const OnLine& a, const OnLine& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });

  std::vector<Segment> segments;
  std::size_t run_start = 0;
  for (std::size_t i = 1; i <= pixels.size(); ++i) {
    const bool split = i == pixels.size() || pixels[i].t - pixels[i - 1].t > params.max_gap;
    if (!split) continue;
    const OnLine& a = pixels[run_start];
    const OnLine& b = pixels[i - 1];
    if (b.t - a.t >= params.min_len && !(a.x == b.x && a.y == b.y)) {
      // The accumulator quantizes rho to a pixel and theta to a degree, so a
      // raw endpoint join inherits up to half a bin of tilt — enough to spoil
      // the line intersections downstream. An orthogonal least-squares fit
      // over the run's own pixels recovers the underlying edge direction to a
      // small fraction of a degree; report the run projected onto that fit.
      const double inv = 1.0 / static_cast<double>(i - run_start);
      double mx = 0.0, my = 0.0;
      for (std::size_t k = run_start; k < i; ++k) {
        mx += pixels[k].x;
        my += pixels[k].y;
      }
      mx *= inv;
      my *= inv;
      double sxx = 0.0, sxy = 0.0, syy = 0.0;
      for (std::size_t k = run_start; k < i; ++k) {
        const double dx = pixels[k].x - mx;
        const double dy = pixels[k].y - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
      }
      // Principal scatter direction; an exactly isotropic run keeps the band
      // direction.
      double dirx = -s, diry = c;
      if (sxy != 0.0 || sxx != syy) {
        const double ang = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
        dirx = std::cos(ang);
        diry = std::sin(ang);
      }
      if (dirx * -s + diry * c < 0.0) {  // preserve the band's orientation
        dirx = -dirx;
        diry = -diry;
      }
      double t_lo = std::numeric_limits<double>::max();
      double t_hi = std::numeric_limits<double>::lowest();
      for (std::size_t k = run_start; k < i; ++k) {
        const double t = (pixels[k].x - mx) * dirx + (pixels[k].y - my) * diry;
        t_lo = std::min(t_lo, t);
        t_hi = std::max(t_hi, t);
      }
      segments.push_back(Segment::make({mx + t_lo * dirx, my + t_lo * diry},
                                       {mx + t_hi * dirx, my + t_hi * diry}));
    }
    run_start = i;
  }
  return segments;
}

HomogLine segment_to_homog(const Segment& seg) {
  if (seg.p1 == seg.p2) raise(Errc::DegenerateSegment, "segment endpoints coincide");
  return line_through(seg.p1, seg.p2);
}

std::vector<Segment> filter_by_angle(const std::vector<Segment>& segments, double min_deg,
                                     double max_deg) {
  if (!(0.0 <= min_deg && min_deg < max_deg && max_deg < 90.0)) {
    raise(Errc::BadAngleWindow, "angle window must satisfy 0 <= min < max < 90");
  }
  std::vector<Segment> kept;
  for (const Segment& s : segments) {
    const double folded = std::min(s.angle_deg, 180.0 - s.angle_deg);
    if (folded >= min_deg - 1e-9 && folded <= max_deg + 1e-9) kept.push_back(s);
  }
  return kept;
}

}  // namespace offside

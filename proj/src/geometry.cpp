#include "offside/geometry.hpp"

#include <cmath>

namespace offside {

HomogLine normalize_line(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (n == 0.0) raise(Errc::DegenerateSegment, "line has zero normal vector");
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  // Flush -0.0 so canonical forms compare bitwise.
  return HomogLine{a + 0.0, b + 0.0, c + 0.0};
}

HomogLine line_through(const Vec2& p, const Vec2& q) {
  return normalize_line(p.y - q.y, q.x - p.x, p.x * q.y - p.y * q.x);
}

double point_line_distance(const Vec2& p, const HomogLine& l) {
  return std::abs(l.a * p.x + l.b * p.y + l.c);
}

std::optional<Vec2> intersect_lines(const HomogLine& l1, const HomogLine& l2,
                                    double parallel_eps) {
  const double w = l1.a * l2.b - l1.b * l2.a;
  if (std::abs(w) < parallel_eps) return std::nullopt;
  const double x = l1.b * l2.c - l1.c * l2.b;
  const double y = l1.c * l2.a - l1.a * l2.c;
  return Vec2{x / w, y / w};
}

std::vector<Vec2> pairwise_intersections(const std::vector<HomogLine>& lines,
                                         double parallel_eps) {
  if (lines.size() < 2) raise(Errc::TooFewLines, "need at least 2 lines to intersect");
  std::vector<Vec2> points;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (auto p = intersect_lines(lines[i], lines[j], parallel_eps)) {
        points.push_back(*p);
      }
    }
  }
  return points;
}

}  // namespace offside

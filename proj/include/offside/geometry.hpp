#pragma once

#include <optional>
#include <vector>

#include "offside/error.hpp"

namespace offside {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

/// Line ax + by + c = 0, normalized so a^2 + b^2 = 1 and the first nonzero
/// of (a, b) is positive. Handles vertical lines without slope blow-up.
struct HomogLine {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Normalize (a,b,c) into the canonical form above.
/// Throws DegenerateSegment when (a,b) == (0,0).
HomogLine normalize_line(double a, double b, double c);

/// The unique normalized line through two distinct points.
HomogLine line_through(const Vec2& p, const Vec2& q);

/// Euclidean distance from p to a normalized line: |a*px + b*py + c|.
double point_line_distance(const Vec2& p, const HomogLine& l);

/// Cross-product intersection of two lines; nullopt when the homogeneous
/// weight |a1*b2 - b1*a2| < parallel_eps (near-parallel).
std::optional<Vec2> intersect_lines(const HomogLine& l1, const HomogLine& l2, double parallel_eps);

/// Intersection points of every unordered pair, in lexicographic pair-index
/// order, skipping near-parallel pairs. Throws TooFewLines when given < 2.
std::vector<Vec2> pairwise_intersections(const std::vector<HomogLine>& lines, double parallel_eps);

}  // namespace offside

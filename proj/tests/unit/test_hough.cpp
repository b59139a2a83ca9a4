#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "offside/error.hpp"
#include "offside/line_detect.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using offside::EdgeMap;
using offside::Errc;
using offside::HoughParams;
using offside::PolarLine;
using offside::Segment;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool matches(const PolarLine& got, double rho, double theta, double rho_tol, double theta_tol) {
  double dt = std::fabs(got.theta - theta);
  dt = std::min(dt, kPi - dt);  // theta is periodic over the [0, pi) normal range
  return dt <= theta_tol && std::fabs(got.rho - rho) <= rho_tol;
}

}  // namespace

TEST_CASE("hough_accumulate returns nothing for an empty edge map") {
  const EdgeMap edges = EdgeMap::make(64, 64);
  HoughParams params;
  params.votes_min = 5;
  CHECK(offside::hough_accumulate(edges, params).empty());
}

TEST_CASE("hough_accumulate recovers a 45-degree pixel diagonal as one peak") {
  EdgeMap edges = EdgeMap::make(64, 64);
  for (int i = 0; i < 64; ++i) edges.set(i, i, true);

  HoughParams params;
  params.votes_min = 32;  // half the pixels on the line
  const std::vector<PolarLine> lines = offside::hough_accumulate(edges, params);

  REQUIRE(lines.size() == 1);
  // The diagonal through the origin has normal angle 135 degrees, offset 0.
  CHECK(matches(lines[0], 0.0, 3.0 * kPi / 4.0, params.rho_res + 1e-9,
                params.theta_res + 1e-9));
}

TEST_CASE("hough_accumulate separates two perpendicular diagonals") {
  EdgeMap edges = EdgeMap::make(64, 64);
  for (int i = 0; i < 64; ++i) {
    edges.set(i, i, true);
    edges.set(i, 63 - i, true);
  }

  HoughParams params;
  params.votes_min = 32;
  const std::vector<PolarLine> lines = offside::hough_accumulate(edges, params);

  REQUIRE(lines.size() == 2);
  const double anti_rho = 63.0 / std::sqrt(2.0);
  const bool has_main = matches(lines[0], 0.0, 3.0 * kPi / 4.0, 1.0, params.theta_res + 1e-9) ||
                        matches(lines[1], 0.0, 3.0 * kPi / 4.0, 1.0, params.theta_res + 1e-9);
  const bool has_anti = matches(lines[0], anti_rho, kPi / 4.0, 1.0, params.theta_res + 1e-9) ||
                        matches(lines[1], anti_rho, kPi / 4.0, 1.0, params.theta_res + 1e-9);
  CHECK(has_main);
  CHECK(has_anti);
}

TEST_CASE("extract_segments finds one span on a solid line") {
  EdgeMap edges = EdgeMap::make(64, 64);
  for (int x = 5; x <= 58; ++x) edges.set(x, 20, true);
  const PolarLine line{20.0, kPi / 2.0};

  HoughParams params;
  params.min_len = 30;
  params.max_gap = 4;
  const std::vector<Segment> segs = offside::extract_segments(edges, line, params);

  REQUIRE(segs.size() == 1);
  // Endpoints are ordered along the line direction, which may run either
  // way; assert the covered span instead of a fixed endpoint order.
  const double lo = std::min(segs[0].p1.x, segs[0].p2.x);
  const double hi = std::max(segs[0].p1.x, segs[0].p2.x);
  CHECK(std::fabs(lo - 5.0) <= 2.0);
  CHECK(std::fabs(hi - 58.0) <= 2.0);
  CHECK(std::fabs(segs[0].p1.y - 20.0) <= 2.0);
  CHECK(std::fabs(segs[0].p2.y - 20.0) <= 2.0);
  CHECK(segs[0].angle_deg == doctest::Approx(0.0));
}

TEST_CASE("extract_segments splits runs at gaps wider than max_gap") {
  EdgeMap edges = EdgeMap::make(64, 64);
  for (int x = 5; x <= 60; ++x) {
    if (x >= 30 && x <= 35) continue;  // 6-pixel hole > max_gap
    edges.set(x, 20, true);
  }
  const PolarLine line{20.0, kPi / 2.0};

  HoughParams params;
  params.min_len = 15;
  params.max_gap = 4;
  std::vector<Segment> segs = offside::extract_segments(edges, line, params);
  REQUIRE(segs.size() == 2);
  // Compare x-spans, which are independent of endpoint order.
  std::vector<std::pair<double, double>> spans;
  for (const Segment& s : segs) {
    spans.emplace_back(std::min(s.p1.x, s.p2.x), std::max(s.p1.x, s.p2.x));
  }
  std::sort(spans.begin(), spans.end());
  CHECK(std::fabs(spans[0].first - 5.0) <= 2.0);
  CHECK(std::fabs(spans[0].second - 29.0) <= 2.0);
  CHECK(std::fabs(spans[1].first - 36.0) <= 2.0);
  CHECK(std::fabs(spans[1].second - 60.0) <= 2.0);

  // A gap within max_gap keeps the run whole.
  EdgeMap bridged = EdgeMap::make(64, 64);
  for (int x = 5; x <= 60; ++x) {
    if (x >= 30 && x <= 32) continue;  // 3-pixel hole <= max_gap
    bridged.set(x, 20, true);
  }
  CHECK(offside::extract_segments(bridged, line, params).size() == 1);
}

TEST_CASE("extract_segments drops runs shorter than min_len") {
  EdgeMap edges = EdgeMap::make(64, 64);
  for (int x = 5; x <= 20; ++x) edges.set(x, 20, true);
  const PolarLine line{20.0, kPi / 2.0};
  HoughParams params;
  params.min_len = 30;
  CHECK(offside::extract_segments(edges, line, params).empty());
}

TEST_CASE("Segment::make folds the direction angle into [0,180)") {
  const Segment a = Segment::make({0, 0}, {1, 1});
  CHECK(a.angle_deg == doctest::Approx(45.0));
  const Segment b = Segment::make({1, 1}, {0, 0});  // reversed endpoints, same angle
  CHECK(b.angle_deg == doctest::Approx(45.0));
  const Segment c = Segment::make({0, 0}, {5, 0});
  CHECK(c.angle_deg == doctest::Approx(0.0));
  const Segment d = Segment::make({0, 0}, {0, 5});
  CHECK(d.angle_deg == doctest::Approx(90.0));
  const Segment e = Segment::make({0, 0}, {-1, 1});
  CHECK(e.angle_deg == doctest::Approx(135.0));
}

TEST_CASE("filter_by_angle keeps oblique stripes and drops flat or square-on ones") {
  std::vector<Segment> segs;
  segs.push_back(Segment::make({0, 0}, {10, 10}));   // 45: kept
  segs.push_back(Segment::make({0, 0}, {100, 9}));   // ~5.1: dropped
  segs.push_back(Segment::make({0, 0}, {0, 10}));    // 90: dropped (max 89)
  segs.push_back(Segment::make({0, 0}, {10, -10}));  // 135 folds to 45: kept
  const std::vector<Segment> kept = offside::filter_by_angle(segs, 18.0, 89.0);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].angle_deg == doctest::Approx(45.0));
  CHECK(kept[1].angle_deg == doctest::Approx(135.0));
}

TEST_CASE("filter_by_angle validates its window") {
  const std::vector<Segment> segs;
  CHECK(testutil::raises(Errc::BadAngleWindow,
                         [&] { (void)offside::filter_by_angle(segs, 50.0, 40.0); }));
  CHECK(testutil::raises(Errc::BadAngleWindow,
                         [&] { (void)offside::filter_by_angle(segs, 18.0, 95.0); }));
  CHECK(testutil::raises(Errc::BadAngleWindow,
                         [&] { (void)offside::filter_by_angle(segs, -5.0, 89.0); }));
}

TEST_CASE("segment_to_homog produces the normalized line through both endpoints") {
  const auto l1 = offside::segment_to_homog(Segment::make({0, 0}, {1, 1}));
  CHECK(l1.a == doctest::Approx(std::sqrt(0.5)));
  CHECK(l1.b == doctest::Approx(-std::sqrt(0.5)));
  CHECK(l1.c == doctest::Approx(0.0));

  const auto l2 = offside::segment_to_homog(Segment::make({0, 5}, {10, 5}));
  CHECK(l2.a == doctest::Approx(0.0));
  CHECK(l2.b == doctest::Approx(1.0));
  CHECK(l2.c == doctest::Approx(-5.0));

  const auto l3 = offside::segment_to_homog(Segment::make({3, 0}, {3, 9}));
  CHECK(l3.a == doctest::Approx(1.0));
  CHECK(l3.b == doctest::Approx(0.0));
  CHECK(l3.c == doctest::Approx(-3.0));
}

TEST_CASE("segment_to_homog rejects a degenerate segment") {
  Segment s;
  s.p1 = {4.0, 4.0};
  s.p2 = {4.0, 4.0};
  CHECK(testutil::raises(Errc::DegenerateSegment, [&] { (void)offside::segment_to_homog(s); }));
}

TEST_CASE("axis-aligned and diagonal lines collect all their votes in one bin") {
  CHECK(props::hough_vote_count(150, 0x40063u) == 0);
}

TEST_CASE("angle filtering is idempotent and matches the fold-to-[0,90] rule") {
  CHECK(props::angle_filter_algebra(300, 0xA6E1u) == 0);
}

TEST_CASE("the canny-hough-filter chain is deterministic") {
  CHECK(props::detect_deterministic(100, 0xDE7EC7u) == 0);
}

#include <doctest.h>

#include <array>
#include <vector>

#include "offside/error.hpp"
#include "offside/line_detect.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using offside::CannyParams;
using offside::EdgeMap;
using offside::Errc;
using offside::Raster;

TEST_CASE("canny finds nothing in a constant image") {
  const Raster img = Raster::make(32, 24, 1, 0.5f);
  const EdgeMap edges = offside::canny(img, CannyParams{});
  CHECK(edges.count() == 0);
}

TEST_CASE("canny thins a vertical step to a one-pixel column") {
  const int w = 24, h = 24;
  Raster img = Raster::make(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) img.at(x, y) = x < 12 ? 0.2f : 0.8f;
  }
  CannyParams params;
  params.sigma = 0.8;
  params.t_low = 0.05f;
  params.t_high = 0.2f;
  const EdgeMap edges = offside::canny(img, params);

  // Non-maximum suppression leaves exactly one column; ties between the two
  // center columns resolve the same way in every row.
  int column = -1;
  for (int y = 0; y < h; ++y) {
    int count = 0, cx = -1;
    for (int x = 0; x < w; ++x) {
      if (edges.test(x, y)) {
        ++count;
        cx = x;
      }
    }
    CHECK(count == 1);
    if (column < 0) column = cx;
    CHECK(cx == column);
  }
  CHECK((column == 11 || column == 12));
}

TEST_CASE("canny validates its thresholds") {
  const Raster img = Raster::make(8, 8, 1, 0.5f);
  CannyParams params;
  params.t_low = 0.3f;
  params.t_high = 0.1f;
  CHECK(testutil::raises(Errc::BadThresholds, [&] { (void)offside::canny(img, params); }));
  params.t_low = -0.2f;
  params.t_high = 0.1f;
  CHECK(testutil::raises(Errc::BadThresholds, [&] { (void)offside::canny(img, params); }));
}

TEST_CASE("hysteresis drops weak pixels unless they connect to a strong seed") {
  const int w = 16, h = 16;
  std::vector<float> mag(static_cast<std::size_t>(w) * h, 0.0f);
  // Boundary of the 5x5 square centered at (8,8): a closed 8-connected ring.
  std::vector<std::array<int, 2>> ring;
  for (int x = 6; x <= 10; ++x) {
    ring.push_back({x, 6});
    ring.push_back({x, 10});
  }
  for (int y = 7; y <= 9; ++y) {
    ring.push_back({6, y});
    ring.push_back({10, y});
  }
  for (const auto& p : ring) mag[static_cast<std::size_t>(p[1]) * w + p[0]] = 0.1f;

  const EdgeMap weak_only = offside::detail::hysteresis(mag, w, h, 0.05f, 0.15f);
  CHECK(weak_only.count() == 0);

  // One strong pixel on the ring rescues the entire connected ring.
  mag[static_cast<std::size_t>(6) * w + 6] = 0.2f;
  const EdgeMap rescued = offside::detail::hysteresis(mag, w, h, 0.05f, 0.15f);
  CHECK(rescued.count() == ring.size());
  for (const auto& p : ring) CHECK(rescued.test(p[0], p[1]));

  // A weak pixel with no 8-connected path to the seed stays dropped.
  mag[static_cast<std::size_t>(2) * w + 13] = 0.1f;
  const EdgeMap island = offside::detail::hysteresis(mag, w, h, 0.05f, 0.15f);
  CHECK(island.count() == ring.size());
  CHECK_FALSE(island.test(13, 2));

  // Raising t_low above the weak value keeps only the strong seed.
  const EdgeMap strict = offside::detail::hysteresis(mag, w, h, 0.12f, 0.15f);
  CHECK(strict.count() == 1);
  CHECK(strict.test(6, 6));
}

TEST_CASE("every canny edge pixel clears the low threshold on the blurred gradient") {
  CHECK(props::canny_subset(200, 0xCA11u) == 0);
}

TEST_CASE("canny edges are maxima along the quantized gradient direction") {
  CHECK(props::canny_thin(200, 0x7711u) == 0);
}

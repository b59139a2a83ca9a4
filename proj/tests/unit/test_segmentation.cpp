#include <doctest.h>

#include <cmath>
#include <vector>

#include "offside/error.hpp"
#include "offside/segmentation.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using offside::BinaryMask;
using offside::Contour;
using offside::Errc;
using offside::GreenRange;
using offside::Raster;

namespace {

Raster uniform_rgb(int w, int h, float r, float g, float b) {
  Raster img = Raster::make(w, h, 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.at(x, y, 0) = r;
      img.at(x, y, 1) = g;
      img.at(x, y, 2) = b;
    }
  }
  return img;
}

BinaryMask square_mask(int w, int h, int x0, int y0, int side) {
  BinaryMask m = BinaryMask::make(w, h);
  for (int y = y0; y < y0 + side; ++y) {
    for (int x = x0; x < x0 + side; ++x) m.set(x, y, true);
  }
  return m;
}

}  // namespace

TEST_CASE("green_mask accepts pitch green and rejects gray under the default range") {
  const GreenRange range;
  const BinaryMask on = offside::green_mask(uniform_rgb(6, 4, 0.2f, 0.7f, 0.25f), range);
  CHECK(on.count() == 24);
  const BinaryMask off = offside::green_mask(uniform_rgb(6, 4, 0.5f, 0.5f, 0.5f), range);
  CHECK(off.count() == 0);
}

TEST_CASE("green_mask is true exactly on the field rows of a split frame") {
  const int w = 8, h = 8;
  Raster img = Raster::make(w, h, 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (y < 3) {  // gray stand at the top
        img.at(x, y, 0) = img.at(x, y, 1) = img.at(x, y, 2) = 0.6f;
      } else {  // pitch below
        img.at(x, y, 0) = 0.22f;
        img.at(x, y, 1) = 0.48f;
        img.at(x, y, 2) = 0.20f;
      }
    }
  }
  const BinaryMask mask = offside::green_mask(img, GreenRange{});
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) CHECK(mask.test(x, y) == (y >= 3));
  }
}

TEST_CASE("green_mask hue wraparound keeps reds when h_lo > h_hi") {
  GreenRange range;
  range.h_lo = 350.0f;
  range.h_hi = 10.0f;
  range.s_lo = 0.5f;
  range.v_lo = 0.1f;
  const BinaryMask red = offside::green_mask(uniform_rgb(3, 3, 0.9f, 0.1f, 0.1f), range);
  CHECK(red.count() == 9);
  const BinaryMask green = offside::green_mask(uniform_rgb(3, 3, 0.1f, 0.9f, 0.1f), range);
  CHECK(green.count() == 0);
}

TEST_CASE("external_contours of one filled square is one contour with the shoelace area") {
  const BinaryMask mask = square_mask(16, 16, 3, 3, 10);
  const std::vector<Contour> contours = offside::external_contours(mask);
  REQUIRE(contours.size() == 1);
  // The traced boundary runs through pixel centers, so a 10x10 block encloses
  // a 9x9 polygon; that is within the one-pixel boundary ring of 100.
  CHECK(contours[0].area == doctest::Approx(81.0));
  CHECK(std::fabs(contours[0].area - 100.0) <= 2 * 10 + 2 * 10);
  CHECK(contours[0].points.size() >= 3);
}

TEST_CASE("external_contours separates disjoint components in scan order") {
  BinaryMask mask = square_mask(20, 12, 2, 2, 4);
  for (int y = 7; y < 10; ++y) {
    for (int x = 12; x < 15; ++x) mask.set(x, y, true);
  }
  const std::vector<Contour> contours = offside::external_contours(mask);
  REQUIRE(contours.size() == 2);
  // Ordered by topmost-leftmost start pixel.
  CHECK(contours[0].points[0][1] == 2);
  CHECK(contours[1].points[0][1] == 7);
  CHECK(contours[0].area == doctest::Approx(9.0));   // 4x4 block -> 3x3 polygon
  CHECK(contours[1].area == doctest::Approx(4.0));   // 3x3 block -> 2x2 polygon
}

TEST_CASE("external_contours ignores interior holes") {
  BinaryMask solid = square_mask(14, 14, 2, 2, 9);
  BinaryMask holed = solid;
  holed.set(6, 6, false);
  holed.set(7, 6, false);
  holed.set(6, 7, false);
  const auto a = offside::external_contours(solid);
  const auto b = offside::external_contours(holed);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(a[0].points == b[0].points);
  CHECK(a[0].area == b[0].area);
}

TEST_CASE("tiny components still produce closed traces") {
  BinaryMask mask = BinaryMask::make(6, 6);
  mask.set(2, 3, true);
  const auto contours = offside::external_contours(mask);
  REQUIRE(contours.size() == 1);
  CHECK(contours[0].points.size() >= 3);
  CHECK(contours[0].area == 0.0);
}

TEST_CASE("fill_contours keeps large components and drops specks below the area fraction") {
  // 20x20 frame: a 12x12 block (shoelace area 121 = 30% of 400) and a 2x2
  // speck (area 1 = 0.25%). min_area_frac 0.01 keeps only the block.
  BinaryMask mask = square_mask(20, 20, 1, 1, 12);
  mask.set(17, 17, true);
  mask.set(18, 17, true);
  mask.set(17, 18, true);
  mask.set(18, 18, true);

  const auto contours = offside::external_contours(mask);
  REQUIRE(contours.size() == 2);
  const BinaryMask filled = offside::fill_contours(contours, 0.01, 20, 20);
  CHECK(filled.count() == 144);
  for (int y = 1; y < 13; ++y) {
    for (int x = 1; x < 13; ++x) CHECK(filled.test(x, y));
  }
  CHECK_FALSE(filled.test(17, 17));
  CHECK_FALSE(filled.test(18, 18));
}

TEST_CASE("fill_contours with threshold zero reproduces a solid component exactly") {
  const BinaryMask mask = square_mask(18, 15, 4, 3, 8);
  const auto contours = offside::external_contours(mask);
  const BinaryMask filled = offside::fill_contours(contours, 0.0, 18, 15);
  CHECK(testutil::same_mask(mask, filled));
}

TEST_CASE("fill_contours fills interior holes of a traced component") {
  BinaryMask solid = square_mask(14, 14, 2, 2, 9);
  BinaryMask holed = solid;
  holed.set(6, 6, false);
  holed.set(7, 7, false);
  const auto contours = offside::external_contours(holed);
  const BinaryMask filled = offside::fill_contours(contours, 0.0, 14, 14);
  CHECK(testutil::same_mask(solid, filled));
}

TEST_CASE("apply_mask keeps pixels where the mask is set and zeroes the rest") {
  Raster img = Raster::make(6, 4, 3);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    img.data[i] = static_cast<float>((i * 7 + 3) % 11) / 11.0f;
  }

  BinaryMask all = BinaryMask::make(6, 4, true);
  CHECK(testutil::same_pixels(offside::apply_mask(img, all), img));

  BinaryMask none = BinaryMask::make(6, 4, false);
  const Raster zeroed = offside::apply_mask(img, none);
  for (float v : zeroed.data) CHECK(v == 0.0f);

  BinaryMask left = BinaryMask::make(6, 4, false);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 3; ++x) left.set(x, y, true);
  }
  const Raster half = offside::apply_mask(img, left);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 6; ++x) {
      for (int c = 0; c < 3; ++c) {
        CHECK(half.at(x, y, c) == (x < 3 ? img.at(x, y, c) : 0.0f));
      }
    }
  }
}

TEST_CASE("apply_mask rejects mismatched shapes") {
  const Raster img = Raster::make(6, 4, 3);
  const BinaryMask mask = BinaryMask::make(5, 4);
  CHECK(testutil::raises(Errc::DimensionMismatch, [&] { (void)offside::apply_mask(img, mask); }));
}

TEST_CASE("widening the green range never loses pixels") {
  CHECK(props::green_mask_monotone(300, 0x6EEE1u) == 0);
}

TEST_CASE("contour areas are bounded by the pixel count on hole-free masks") {
  CHECK(props::contour_area_bound(200, 0xA2EAu) == 0);
}

TEST_CASE("trace-then-fill reproduces solid components") {
  CHECK(props::fill_roundtrip(200, 0xF111u) == 0);
}

TEST_CASE("segmentation fill is idempotent") {
  CHECK(props::fill_idempotent(200, 0x1DEAu) == 0);
}

TEST_CASE("apply_mask is idempotent") {
  CHECK(props::apply_mask_idempotent(300, 0xAB3Du) == 0);
}

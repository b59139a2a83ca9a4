#include <doctest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "offside/config.hpp"
#include "offside/error.hpp"
#include "test_util.hpp"

using nlohmann::json;
using offside::Errc;
using offside::GoalSide;
using offside::PipelineConfig;
using offside::SelectionMode;

namespace {

json minimal() { return json{{"schema", "offside-config/1"}}; }

}  // namespace

TEST_CASE("an empty config document yields the documented defaults") {
  const PipelineConfig cfg = offside::config_from_json(minimal());
  CHECK(cfg.green_range.h_lo == 70.0f);
  CHECK(cfg.green_range.h_hi == 170.0f);
  CHECK(cfg.green_range.s_lo == 0.25f);
  CHECK(cfg.min_area_frac == 0.01);
  CHECK(cfg.canny.sigma == 1.4);
  CHECK(cfg.canny.t_low == 0.06f);
  CHECK(cfg.canny.t_high == 0.16f);
  CHECK(cfg.hough.rho_res == 1.0);
  CHECK(cfg.hough.votes_min == 120);
  CHECK(cfg.hough.min_len == 60.0);
  CHECK(cfg.hough.max_gap == 8.0);
  CHECK(cfg.angle_min_deg == 18.0);
  CHECK(cfg.angle_max_deg == 89.0);
  CHECK(cfg.ransac.iterations == 1000);
  CHECK(cfg.ransac.inlier_dist == 20.0);
  CHECK(cfg.ransac.early_exit_frac == 0.6);
  CHECK(cfg.ransac.seed == 0);
  CHECK(cfg.engine.goal_side == GoalSide::Right);
  CHECK(cfg.engine.det_thresh == 0.7);
  CHECK(cfg.engine.kp_thresh == 0.5);
  CHECK(cfg.engine.desired_ids == std::set<int>{5, 6, 13, 14, 15, 16});
  CHECK(cfg.engine.selection_mode == SelectionMode::BottomIntercept);
  CHECK(cfg.overlay.segments);
  CHECK(cfg.overlay.verdicts);
}

TEST_CASE("partial overrides change only the named values") {
  json doc = minimal();
  doc["canny"] = {{"sigma", 2.0}};
  doc["engine"] = {{"goal_side", "left"}, {"desired_ids", json::array({15, 16})}};
  doc["overlay"] = {{"keypoints", false}};
  const PipelineConfig cfg = offside::config_from_json(doc);
  CHECK(cfg.canny.sigma == 2.0);
  CHECK(cfg.canny.t_low == 0.06f);  // untouched default
  CHECK(cfg.engine.goal_side == GoalSide::Left);
  CHECK(cfg.engine.desired_ids == std::set<int>{15, 16});
  CHECK(cfg.engine.det_thresh == 0.7);
  CHECK_FALSE(cfg.overlay.keypoints);
  CHECK(cfg.overlay.segments);
}

TEST_CASE("unknown keys are rejected wherever they appear") {
  json doc = minimal();
  doc["cany"] = json::object();
  CHECK(testutil::raises(Errc::ConfigError, [&] { (void)offside::config_from_json(doc); }));

  doc = minimal();
  doc["canny"] = {{"sgima", 1.0}};
  CHECK(testutil::raises(Errc::ConfigError, [&] { (void)offside::config_from_json(doc); }));

  doc = minimal();
  doc["engine"] = {{"goalside", "left"}};
  CHECK(testutil::raises(Errc::ConfigError, [&] { (void)offside::config_from_json(doc); }));

  doc = minimal();
  doc["overlay"] = {{"players", true}};
  CHECK(testutil::raises(Errc::ConfigError, [&] { (void)offside::config_from_json(doc); }));
}

TEST_CASE("the schema tag is mandatory and checked") {
  CHECK(testutil::raises(Errc::ConfigError,
                         [] { (void)offside::config_from_json(json::object()); }));
  CHECK(testutil::raises(Errc::ConfigError, [] {
    (void)offside::config_from_json(json{{"schema", "offside-config/2"}});
  }));
  CHECK(testutil::raises(Errc::ConfigError,
                         [] { (void)offside::config_from_json(json::array()); }));
}

TEST_CASE("out-of-range values are rejected with ConfigError") {
  auto rejects = [](json doc) {
    return testutil::raises(Errc::ConfigError,
                            [&] { (void)offside::config_from_json(doc); });
  };

  json doc = minimal();
  doc["green_range"] = {{"h_lo", 400.0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["green_range"] = {{"s_lo", 0.9}, {"s_hi", 0.2}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["min_area_frac"] = 1.5;
  CHECK(rejects(doc));

  doc = minimal();
  doc["canny"] = {{"t_low", 0.5}, {"t_high", 0.1}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["canny"] = {{"sigma", -1.0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["hough"] = {{"votes_min", 0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["hough"] = {{"rho_res", -2.0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["angle"] = {{"min_deg", 50.0}, {"max_deg", 40.0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["angle"] = {{"max_deg", 90.0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["ransac"] = {{"iterations", 0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["ransac"] = {{"early_exit_frac", 0.0}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["ransac"] = {{"early_exit_frac", 1.5}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["ransac"] = {{"seed", -4}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["engine"] = {{"det_thresh", 1.2}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["engine"] = {{"desired_ids", json::array()}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["engine"] = {{"desired_ids", json::array({5, 21})}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["engine"] = {{"goal_side", "up"}};
  CHECK(rejects(doc));

  doc = minimal();
  doc["engine"] = {{"selection_mode", "widest"}};
  CHECK(rejects(doc));
}

TEST_CASE("a wraparound hue window is legal") {
  json doc = minimal();
  doc["green_range"] = {{"h_lo", 350.0}, {"h_hi", 10.0}};
  const PipelineConfig cfg = offside::config_from_json(doc);
  CHECK(cfg.green_range.h_lo == 350.0f);
  CHECK(cfg.green_range.h_hi == 10.0f);
}

TEST_CASE("config_to_json round trips through config_from_json") {
  json doc = minimal();
  doc["canny"] = {{"sigma", 1.8}};
  doc["ransac"] = {{"seed", 99}};
  doc["engine"] = {{"goal_side", "left"}, {"selection_mode", "min_abs_slope"}};
  const PipelineConfig cfg = offside::config_from_json(doc);
  const json dumped = offside::config_to_json(cfg);
  const PipelineConfig back = offside::config_from_json(dumped);
  CHECK(offside::config_to_json(back) == dumped);
  CHECK(back.canny.sigma == 1.8);
  CHECK(back.ransac.seed == 99);
  CHECK(back.engine.goal_side == GoalSide::Left);
  CHECK(back.engine.selection_mode == SelectionMode::MinAbsSlope);
}

TEST_CASE("load_config_file distinguishes missing files from bad documents") {
  const auto dir = testutil::scratch_dir("cfg");
  CHECK(testutil::raises(Errc::IoError, [&] {
    (void)offside::load_config_file((dir / "absent.json").string());
  }));

  const std::string bad = (dir / "bad.json").string();
  {
    std::ofstream out(bad);
    out << "{ nope";
  }
  CHECK(testutil::raises(Errc::ConfigError, [&] { (void)offside::load_config_file(bad); }));

  const std::string good = (dir / "good.json").string();
  {
    std::ofstream out(good);
    out << R"({"schema": "offside-config/1", "hough": {"votes_min": 77}})";
  }
  const PipelineConfig cfg = offside::load_config_file(good);
  CHECK(cfg.hough.votes_min == 77);
}

#pragma once

#include <string>

#include <json.hpp>

#include "offside/engine.hpp"
#include "offside/line_detect.hpp"
#include "offside/ransac.hpp"
#include "offside/segmentation.hpp"

namespace offside {

/// Which overlay layers draw_overlay renders.
struct OverlayToggles {
  bool segments = true;
  bool virtual_lines = true;
  bool offside_line = true;
  bool keypoints = true;
  bool verdicts = true;
};

/// Every tunable of the per-frame pipeline, loadable from one JSON document
/// ("schema": "offside-config/1"). All keys are optional; values not present
/// keep their defaults. Unknown keys anywhere in the document are rejected.
struct PipelineConfig {
  GreenRange green_range;
  double min_area_frac = 0.01;
  CannyParams canny;
  HoughParams hough;
  double angle_min_deg = 18.0;
  double angle_max_deg = 89.0;
  RansacParams ransac;
  EngineConfig engine;
  OverlayToggles overlay;
};

/// Throws ConfigError on unknown keys, wrong types, a missing/unsupported
/// schema tag, or values that violate a stage's invariants.
PipelineConfig config_from_json(const nlohmann::json& doc);

/// Throws IoError when the file cannot be read, ConfigError otherwise.
PipelineConfig load_config_file(const std::string& path);

nlohmann::json config_to_json(const PipelineConfig& cfg);

}  // namespace offside

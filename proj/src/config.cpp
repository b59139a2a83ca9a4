#include "offside/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>

namespace offside {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) raise(Errc::ConfigError, where + " must be an object");
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&key](const char* a) { return key == a; });
    if (!known) raise(Errc::ConfigError, "unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read_number(const json& obj, const char* key, const std::string& where, T& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number()) raise(Errc::ConfigError, where + "." + key + " must be a number");
  out = it->get<T>();
}

void read_int(const json& obj, const char* key, const std::string& where, int& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number_integer()) raise(Errc::ConfigError, where + "." + key + " must be an integer");
  out = it->get<int>();
}

void read_bool(const json& obj, const char* key, const std::string& where, bool& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_boolean()) raise(Errc::ConfigError, where + "." + key + " must be a boolean");
  out = it->get<bool>();
}

void parse_green(const json& obj, GreenRange& g) {
  check_keys(obj, "green_range", {"h_lo", "h_hi", "s_lo", "s_hi", "v_lo", "v_hi"});
  read_number(obj, "h_lo", "green_range", g.h_lo);
  read_number(obj, "h_hi", "green_range", g.h_hi);
  read_number(obj, "s_lo", "green_range", g.s_lo);
  read_number(obj, "s_hi", "green_range", g.s_hi);
  read_number(obj, "v_lo", "green_range", g.v_lo);
  read_number(obj, "v_hi", "green_range", g.v_hi);
  auto frac = [](float v) { return v >= 0.0f && v <= 1.0f; };
  if (g.h_lo < 0.0f || g.h_lo >= 360.0f || g.h_hi < 0.0f || g.h_hi >= 360.0f ||
      !frac(g.s_lo) || !frac(g.s_hi) || !frac(g.v_lo) || !frac(g.v_hi) || g.s_lo > g.s_hi ||
      g.v_lo > g.v_hi) {
    raise(Errc::ConfigError, "green_range values out of range");
  }
}

void parse_canny(const json& obj, CannyParams& c) {
  check_keys(obj, "canny", {"sigma", "t_low", "t_high"});
  read_number(obj, "sigma", "canny", c.sigma);
  read_number(obj, "t_low", "canny", c.t_low);
  read_number(obj, "t_high", "canny", c.t_high);
  if (c.sigma < 0.0 || c.t_low < 0.0f || c.t_low > c.t_high) {
    raise(Errc::ConfigError, "canny thresholds invalid");
  }
}

void parse_hough(const json& obj, HoughParams& h) {
  check_keys(obj, "hough", {"rho_res", "theta_res", "votes_min", "max_gap", "min_len"});
  read_number(obj, "rho_res", "hough", h.rho_res);
  read_number(obj, "theta_res", "hough", h.theta_res);
  read_int(obj, "votes_min", "hough", h.votes_min);
  read_number(obj, "max_gap", "hough", h.max_gap);
  read_number(obj, "min_len", "hough", h.min_len);
  if (h.rho_res <= 0.0 || h.theta_res <= 0.0 || h.votes_min <= 0 || h.max_gap <= 0.0 ||
      h.min_len <= 0.0) {
    raise(Errc::ConfigError, "hough parameters must be positive");
  }
}

void parse_angle(const json& obj, PipelineConfig& cfg) {
  check_keys(obj, "angle", {"min_deg", "max_deg"});
  read_number(obj, "min_deg", "angle", cfg.angle_min_deg);
  read_number(obj, "max_deg", "angle", cfg.angle_max_deg);
  if (!(cfg.angle_min_deg >= 0.0 && cfg.angle_min_deg < cfg.angle_max_deg &&
        cfg.angle_max_deg < 90.0)) {
    raise(Errc::ConfigError, "angle window must satisfy 0 <= min < max < 90");
  }
}

void parse_ransac(const json& obj, RansacParams& r) {
  check_keys(obj, "ransac", {"iterations", "inlier_dist", "early_exit_frac", "seed"});
  read_int(obj, "iterations", "ransac", r.iterations);
  read_number(obj, "inlier_dist", "ransac", r.inlier_dist);
  read_number(obj, "early_exit_frac", "ransac", r.early_exit_frac);
  if (const auto it = obj.find("seed"); it != obj.end()) {
    if (!it->is_number_integer() ||
        (!it->is_number_unsigned() && it->get<std::int64_t>() < 0)) {
      raise(Errc::ConfigError, "ransac.seed must be a nonnegative integer");
    }
    r.seed = it->get<std::uint64_t>();
  }
  if (r.iterations <= 0 || r.inlier_dist <= 0.0 || r.early_exit_frac <= 0.0 ||
      r.early_exit_frac > 1.0) {
    raise(Errc::ConfigError, "ransac parameters out of range");
  }
}

void parse_engine(const json& obj, EngineConfig& e) {
  check_keys(obj, "engine",
             {"goal_side", "det_thresh", "kp_thresh", "desired_ids", "selection_mode"});
  if (const auto it = obj.find("goal_side"); it != obj.end()) {
    if (!it->is_string()) raise(Errc::ConfigError, "engine.goal_side must be a string");
    e.goal_side = goal_side_from_string(it->get<std::string>());
  }
  read_number(obj, "det_thresh", "engine", e.det_thresh);
  read_number(obj, "kp_thresh", "engine", e.kp_thresh);
  if (const auto it = obj.find("desired_ids"); it != obj.end()) {
    if (!it->is_array()) raise(Errc::ConfigError, "engine.desired_ids must be an array");
    e.desired_ids.clear();
    for (const json& v : *it) {
      if (!v.is_number_integer()) {
        raise(Errc::ConfigError, "engine.desired_ids entries must be integers");
      }
      const int id = v.get<int>();
      if (id < 0 || id > 16) raise(Errc::ConfigError, "engine.desired_ids entries must be 0..16");
      e.desired_ids.insert(id);
    }
    if (e.desired_ids.empty()) raise(Errc::ConfigError, "engine.desired_ids must be nonempty");
  }
  if (const auto it = obj.find("selection_mode"); it != obj.end()) {
    if (!it->is_string()) raise(Errc::ConfigError, "engine.selection_mode must be a string");
    e.selection_mode = selection_mode_from_string(it->get<std::string>());
  }
  if (e.det_thresh < 0.0 || e.det_thresh > 1.0 || e.kp_thresh < 0.0 || e.kp_thresh > 1.0) {
    raise(Errc::ConfigError, "engine thresholds must lie in [0, 1]");
  }
}

void parse_overlay(const json& obj, OverlayToggles& o) {
  check_keys(obj, "overlay",
             {"segments", "virtual_lines", "offside_line", "keypoints", "verdicts"});
  read_bool(obj, "segments", "overlay", o.segments);
  read_bool(obj, "virtual_lines", "overlay", o.virtual_lines);
  read_bool(obj, "offside_line", "overlay", o.offside_line);
  read_bool(obj, "keypoints", "overlay", o.keypoints);
  read_bool(obj, "verdicts", "overlay", o.verdicts);
}

}  // namespace

PipelineConfig config_from_json(const json& doc) {
  if (!doc.is_object()) raise(Errc::ConfigError, "config root must be an object");
  check_keys(doc, "config",
             {"schema", "green_range", "min_area_frac", "canny", "hough", "angle", "ransac",
              "engine", "overlay"});
  const auto schema = doc.find("schema");
  if (schema == doc.end() || !schema->is_string() ||
      schema->get<std::string>() != "offside-config/1") {
    raise(Errc::ConfigError, "config schema must be 'offside-config/1'");
  }

  PipelineConfig cfg;
  if (const auto it = doc.find("green_range"); it != doc.end()) parse_green(*it, cfg.green_range);
  read_number(doc, "min_area_frac", "config", cfg.min_area_frac);
  if (cfg.min_area_frac < 0.0 || cfg.min_area_frac > 1.0) {
    raise(Errc::ConfigError, "min_area_frac must lie in [0, 1]");
  }
  if (const auto it = doc.find("canny"); it != doc.end()) parse_canny(*it, cfg.canny);
  if (const auto it = doc.find("hough"); it != doc.end()) parse_hough(*it, cfg.hough);
  if (const auto it = doc.find("angle"); it != doc.end()) parse_angle(*it, cfg);
  if (const auto it = doc.find("ransac"); it != doc.end()) parse_ransac(*it, cfg.ransac);
  if (const auto it = doc.find("engine"); it != doc.end()) parse_engine(*it, cfg.engine);
  if (const auto it = doc.find("overlay"); it != doc.end()) parse_overlay(*it, cfg.overlay);
  return cfg;
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    raise(Errc::ConfigError, path + ": " + e.what());
  }
  return config_from_json(doc);
}

nlohmann::json config_to_json(const PipelineConfig& cfg) {
  json ids = json::array();
  for (int id : cfg.engine.desired_ids) ids.push_back(id);
  return json{
      {"schema", "offside-config/1"},
      {"green_range",
       {{"h_lo", cfg.green_range.h_lo},
        {"h_hi", cfg.green_range.h_hi},
        {"s_lo", cfg.green_range.s_lo},
        {"s_hi", cfg.green_range.s_hi},
        {"v_lo", cfg.green_range.v_lo},
        {"v_hi", cfg.green_range.v_hi}}},
      {"min_area_frac", cfg.min_area_frac},
      {"canny", {{"sigma", cfg.canny.sigma}, {"t_low", cfg.canny.t_low}, {"t_high", cfg.canny.t_high}}},
      {"hough",
       {{"rho_res", cfg.hough.rho_res},
        {"theta_res", cfg.hough.theta_res},
        {"votes_min", cfg.hough.votes_min},
        {"max_gap", cfg.hough.max_gap},
        {"min_len", cfg.hough.min_len}}},
      {"angle", {{"min_deg", cfg.angle_min_deg}, {"max_deg", cfg.angle_max_deg}}},
      {"ransac",
       {{"iterations", cfg.ransac.iterations},
        {"inlier_dist", cfg.ransac.inlier_dist},
        {"early_exit_frac", cfg.ransac.early_exit_frac},
        {"seed", cfg.ransac.seed}}},
      {"engine",
       {{"goal_side", to_string(cfg.engine.goal_side)},
        {"det_thresh", cfg.engine.det_thresh},
        {"kp_thresh", cfg.engine.kp_thresh},
        {"desired_ids", std::move(ids)},
        {"selection_mode", to_string(cfg.engine.selection_mode)}}},
      {"overlay",
       {{"segments", cfg.overlay.segments},
        {"virtual_lines", cfg.overlay.virtual_lines},
        {"offside_line", cfg.overlay.offside_line},
        {"keypoints", cfg.overlay.keypoints},
        {"verdicts", cfg.overlay.verdicts}}},
  };
}

}  // namespace offside

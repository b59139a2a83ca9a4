#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "offside/error.hpp"

namespace offside {

enum class Team { Attacking, Defending, Neutral };
enum class Role { Outfield, Goalkeeper, Referee };

const char* to_string(Team t);
const char* to_string(Role r);
Team team_from_string(const std::string& s);
Role role_from_string(const std::string& s);

/// One COCO-17 landmark (0-16) in image pixels.
struct Keypoint {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double confidence = 1.0;
};

struct PlayerAnnotation {
  std::string player_id;
  Team team = Team::Neutral;
  Role role = Role::Outfield;
  double det_score = 1.0;
  std::array<double, 4> bbox{0, 0, 0, 0};  // x, y, w, h
  std::vector<Keypoint> keypoints;
};

struct FrameAnnotations {
  std::string frame_id;
  std::vector<PlayerAnnotation> players;
};

/// Parse and validate a per-frame annotation document (schema "offside/1").
/// Unknown fields are ignored; missing fields, out-of-range values,
/// duplicate keypoint ids, and duplicate player ids are errors.
FrameAnnotations load_annotations(const nlohmann::json& doc);
FrameAnnotations load_annotations_file(const std::string& path);

nlohmann::json annotations_to_json(const FrameAnnotations& ann);
void save_annotations_file(const std::string& path, const FrameAnnotations& ann);

}  // namespace offside

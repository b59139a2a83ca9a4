#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "offside/annotations.hpp"
#include "offside/engine.hpp"
#include "offside/geometry.hpp"
#include "offside/raster.hpp"

namespace offside::synth {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;  // row-major

/// Pinhole camera: Xc = R*Xw + t, u = fx*Xc/Zc + cx, v = fy*Yc/Zc + cy.
/// R rows are the camera axes (x right, y down, z forward) in world
/// coordinates; the world frame has the pitch plane at z=0 with z up.
struct CameraModel {
  double fx = 1000.0, fy = 1000.0;
  double cx = 640.0, cy = 360.0;
  Mat3 R{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 t{0, 0, 0};
};

/// Striped pitch: x runs along the length (0..length), y across the width
/// (0..width), stripes alternate along x so their boundary lines run across
/// the width.
struct PitchSpec {
  double length = 105.0;  // meters
  double width = 68.0;
  int stripe_count = 14;
  // Both tones are mid-hue greens but differ strongly in saturation (0.5 vs
  // 0.8), so the stripe boundaries carry a clean step in the saturation plane
  // the detector reads.
  std::array<float, 3> light_rgb{0.40f, 0.80f, 0.40f};
  std::array<float, 3> dark_rgb{0.10f, 0.50f, 0.10f};
};

struct ScenePlayer {
  std::string player_id;
  Team team = Team::Attacking;
  Role role = Role::Outfield;
  double x = 0.0, y = 0.0;                  // ground point on the pitch plane
  std::map<int, Vec3> keypoint_offsets;     // keypoint id -> offset in meters
};

/// Goal line the attackers play toward, in world coordinates.
enum class GoalSideWorld { PlusX, MinusX };

struct GroundTruth {
  std::optional<Vec2> vp_true;  // nullopt = stripe direction parallel to the image plane
  bool has_defenders = false;
  std::string last_defender_id;
  std::map<std::string, bool> offside_flags;  // attacking outfield players only
};

struct Scene {
  PitchSpec pitch;
  CameraModel camera;
  std::vector<ScenePlayer> players;
  GoalSideWorld goal_side = GoalSideWorld::PlusX;
  int width = 1280;
  int height = 720;
  std::string frame_id = "frame";
};

/// Shared body layout (shoulders 5/6, knees 13/14, ankles 15/16). The x
/// offsets are all zero, so every keypoint of a player shares the player's
/// world x and image-space ordering along the pitch length matches world
/// ordering exactly.
const std::map<int, Vec3>& canonical_keypoint_offsets();

/// Throws DegenerateCamera unless R is orthonormal with det +1 (to 1e-9) and
/// the focal lengths are positive.
void validate_camera(const CameraModel& cam);

/// World -> image; throws BehindCamera when the camera-space depth is <= 0.
Vec2 project(const CameraModel& cam, const Vec3& world);

/// Image of the point at infinity of `direction`: nullopt when the direction
/// is parallel to the image plane. Throws ZeroDirection.
std::optional<Vec2> true_vanishing_point(const CameraModel& cam, const Vec3& direction);

/// Camera at `eye` looking at `target` (world up = +z); image y points down.
/// Throws DegenerateCamera when the view direction is vertical.
CameraModel camera_look_at(const Vec3& eye, const Vec3& target, double fx, double fy, double cx,
                           double cy);

/// Exact image lines of the interior stripe boundaries (x = k*length/count),
/// skipping any boundary that does not project cleanly in front of the
/// camera.
std::vector<HomogLine> stripe_boundary_lines(const PitchSpec& pitch, const CameraModel& cam);

/// Last defender and offside flags by world x (strictly-beyond rule; level is
/// onside; goalkeeper excluded). has_defenders=false when the defending side
/// has no outfield player.
GroundTruth true_offside(const std::vector<ScenePlayer>& players, GoalSideWorld goal_side);

/// Rasterize the scene (ray-plane ground, gray background, players as team-
/// colored disks at projected keypoints), with exact annotations
/// (det_score/confidence 1.0) and ground truth. Throws DegenerateCamera when
/// the pitch center is behind the camera.
struct RenderedScene {
  Raster frame;
  FrameAnnotations annotations;
  GroundTruth truth;
};
RenderedScene render_scene(const Scene& scene);

/// The engine goal side that corresponds to the world goal side under this
/// camera (which image direction world +x maps to near the pitch center).
GoalSide image_goal_side(const Scene& scene);

/// Seeded random oblique-view scene: elevated sideline camera with the
/// view direction 10-45 degrees away from straight across the pitch, 3-8
/// players per side plus optional goalkeeper and referee, canonical keypoint
/// offsets, player x positions snapped to distinct 25 cm grid cells (so no
/// two players are ever exactly level).
Scene random_scene(std::uint64_t seed);

/// Same sideline setup but with the view direction's world-y component
/// exactly zero, so the stripe direction is parallel to the image plane and
/// the true vanishing point does not exist.
Scene degenerate_scene(std::uint64_t seed);

nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& doc);
Scene load_scene_file(const std::string& path);
void save_scene_file(const std::string& path, const Scene& scene);

nlohmann::json truth_to_json(const std::string& frame_id, const GroundTruth& truth);

}  // namespace offside::synth

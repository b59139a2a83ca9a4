#include "offside/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <set>

namespace offside::synth {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Vec3 minus(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 plus(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Vec3 mat_t_vec(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[1][0] * v[1] + m[2][0] * v[2],
          m[0][1] * v[0] + m[1][1] * v[1] + m[2][1] * v[2],
          m[0][2] * v[0] + m[1][2] * v[1] + m[2][2] * v[2]};
}

// Portable uniform draw in [lo, hi]: mt19937_64's output sequence is fixed by
// the standard, the library distributions are not.
double unif(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() % 1000001) / 1e6);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

struct PlayerColor {
  float r, g, b;
};

PlayerColor team_color(Team t) {
  switch (t) {
    case Team::Attacking: return {0.82f, 0.15f, 0.10f};
    case Team::Defending: return {0.10f, 0.18f, 0.82f};
    case Team::Neutral: return {0.95f, 0.85f, 0.10f};
  }
  return {0.5f, 0.5f, 0.5f};
}

}  // namespace

const std::map<int, Vec3>& canonical_keypoint_offsets() {
  // Zero x offsets: every keypoint shares its player's position along the
  // pitch length, so world-x order and virtual-line order coincide exactly.
  static const std::map<int, Vec3> offsets = {
      {5, {0.0, -0.20, 1.45}},  // left shoulder
      {6, {0.0, 0.20, 1.45}},   // right shoulder
      {13, {0.0, -0.12, 0.50}}, // left knee
      {14, {0.0, 0.12, 0.50}},  // right knee
      {15, {0.0, -0.10, 0.05}}, // left ankle
      {16, {0.0, 0.10, 0.05}},  // right ankle
  };
  return offsets;
}

void validate_camera(const CameraModel& cam) {
  if (!(cam.fx > 0.0) || !(cam.fy > 0.0)) {
    raise(Errc::DegenerateCamera, "focal lengths must be positive");
  }
  const Vec3 rx = cam.R[0], ry = cam.R[1], rz = cam.R[2];
  const double tol = 1e-9;
  if (std::abs(norm(rx) - 1.0) > tol || std::abs(norm(ry) - 1.0) > tol ||
      std::abs(norm(rz) - 1.0) > tol || std::abs(dot(rx, ry)) > tol ||
      std::abs(dot(rx, rz)) > tol || std::abs(dot(ry, rz)) > tol) {
    raise(Errc::DegenerateCamera, "rotation is not orthonormal");
  }
  if (std::abs(dot(rx, cross(ry, rz)) - 1.0) > tol) {
    raise(Errc::DegenerateCamera, "rotation determinant is not +1");
  }
}

Vec2 project(const CameraModel& cam, const Vec3& world) {
  const Vec3 pc = plus(mat_vec(cam.R, world), cam.t);
  if (pc[2] <= 0.0) raise(Errc::BehindCamera, "point is behind the camera");
  return Vec2{cam.fx * pc[0] / pc[2] + cam.cx, cam.fy * pc[1] / pc[2] + cam.cy};
}

std::optional<Vec2> true_vanishing_point(const CameraModel& cam, const Vec3& direction) {
  const double n = norm(direction);
  if (n == 0.0) raise(Errc::ZeroDirection, "direction must be nonzero");
  const Vec3 d = mat_vec(cam.R, scaled(direction, 1.0 / n));
  if (std::abs(d[2]) < 1e-9) return std::nullopt;
  return Vec2{cam.fx * d[0] / d[2] + cam.cx, cam.fy * d[1] / d[2] + cam.cy};
}

CameraModel camera_look_at(const Vec3& eye, const Vec3& target, double fx, double fy, double cx,
                           double cy) {
  const Vec3 fwd = minus(target, eye);
  const double n = norm(fwd);
  if (n == 0.0) raise(Errc::DegenerateCamera, "eye and target coincide");
  const Vec3 zc = scaled(fwd, 1.0 / n);
  const Vec3 side = cross(zc, Vec3{0.0, 0.0, 1.0});
  const double sn = norm(side);
  if (sn < 1e-12) raise(Errc::DegenerateCamera, "view direction is vertical");
  const Vec3 xc = scaled(side, 1.0 / sn);
  const Vec3 yc = cross(zc, xc);

  CameraModel cam;
  cam.fx = fx;
  cam.fy = fy;
  cam.cx = cx;
  cam.cy = cy;
  cam.R = {{{xc[0], xc[1], xc[2]}, {yc[0], yc[1], yc[2]}, {zc[0], zc[1], zc[2]}}};
  cam.t = {-dot(xc, eye), -dot(yc, eye), -dot(zc, eye)};
  return cam;
}

std::vector<HomogLine> stripe_boundary_lines(const PitchSpec& pitch, const CameraModel& cam) {
  std::vector<HomogLine> lines;
  const double pitch_step = pitch.length / pitch.stripe_count;
  for (int k = 1; k < pitch.stripe_count; ++k) {
    const double xk = k * pitch_step;
    try {
      const Vec2 p1 = project(cam, {xk, pitch.width * 0.1, 0.0});
      const Vec2 p2 = project(cam, {xk, pitch.width * 0.9, 0.0});
      if (p1 == p2) continue;
      lines.push_back(line_through(p1, p2));
    } catch (const Error& e) {
      if (e.code() == Errc::BehindCamera) continue;
      throw;
    }
  }
  return lines;
}

GroundTruth true_offside(const std::vector<ScenePlayer>& players, GoalSideWorld goal_side) {
  const double sign = goal_side == GoalSideWorld::PlusX ? 1.0 : -1.0;
  auto extreme_x = [sign](const ScenePlayer& p) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [id, off] : p.keypoint_offsets) {
      best = std::max(best, sign * (p.x + off[0]));
    }
    return best;
  };

  // Scan in player_id order so an exact tie keeps the smallest id, matching
  // the engine's selection rule.
  std::vector<const ScenePlayer*> sorted;
  for (const ScenePlayer& p : players) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const ScenePlayer* a, const ScenePlayer* b) {
    return a->player_id < b->player_id;
  });

  GroundTruth truth;
  double last_extreme = -std::numeric_limits<double>::infinity();
  for (const ScenePlayer* p : sorted) {
    if (p->team != Team::Defending || p->role != Role::Outfield || p->keypoint_offsets.empty()) {
      continue;
    }
    const double e = extreme_x(*p);
    if (!truth.has_defenders || e > last_extreme) {
      last_extreme = e;
      truth.last_defender_id = p->player_id;
      truth.has_defenders = true;
    }
  }
  if (!truth.has_defenders) return truth;

  for (const ScenePlayer& p : players) {
    if (p.team != Team::Attacking || p.role != Role::Outfield || p.keypoint_offsets.empty()) {
      continue;
    }
    truth.offside_flags[p.player_id] = extreme_x(p) > last_extreme;
  }
  return truth;
}

RenderedScene render_scene(const Scene& scene) {
  validate_camera(scene.camera);
  const CameraModel& cam = scene.camera;
  const PitchSpec& pitch = scene.pitch;
  if (pitch.stripe_count < 2 || pitch.length <= 0.0 || pitch.width <= 0.0) {
    raise(Errc::DegenerateCamera, "pitch dimensions invalid");
  }
  {
    const Vec3 center{pitch.length / 2.0, pitch.width / 2.0, 0.0};
    const Vec3 pc = plus(mat_vec(cam.R, center), cam.t);
    if (pc[2] <= 0.0) raise(Errc::DegenerateCamera, "pitch center is behind the camera");
  }

  RenderedScene out;
  out.frame = Raster::make(scene.width, scene.height, 3, 0.5f);

  // Ground: per-pixel ray through the pixel center intersected with z=0.
  const Vec3 center = scaled(mat_t_vec(cam.R, cam.t), -1.0);
  const double stripe_step = pitch.length / pitch.stripe_count;
  for (int v = 0; v < scene.height; ++v) {
    for (int u = 0; u < scene.width; ++u) {
      const Vec3 dir_cam{(u - cam.cx) / cam.fx, (v - cam.cy) / cam.fy, 1.0};
      const Vec3 dir = mat_t_vec(cam.R, dir_cam);
      if (dir[2] >= 0.0 || center[2] <= 0.0) continue;  // ray never reaches the ground
      const double s = -center[2] / dir[2];
      const double gx = center[0] + s * dir[0];
      const double gy = center[1] + s * dir[1];
      if (gx < 0.0 || gx > pitch.length || gy < 0.0 || gy > pitch.width) continue;
      int stripe = static_cast<int>(gx / stripe_step);
      stripe = std::clamp(stripe, 0, pitch.stripe_count - 1);
      const auto& c = (stripe % 2 == 0) ? pitch.light_rgb : pitch.dark_rgb;
      const std::size_t i = out.frame.index(u, v);
      out.frame.data[i] = c[0];
      out.frame.data[i + 1] = c[1];
      out.frame.data[i + 2] = c[2];
    }
  }

  // Players: a disk per keypoint, plus exact annotations.
  out.annotations.frame_id = scene.frame_id;
  for (const ScenePlayer& sp : scene.players) {
    PlayerAnnotation pa;
    pa.player_id = sp.player_id;
    pa.team = sp.team;
    pa.role = sp.role;
    pa.det_score = 1.0;
    double min_x = 1e30, min_y = 1e30, max_x = -1e30, max_y = -1e30;
    double max_r = 0.0;
    const PlayerColor color = team_color(sp.team);
    for (const auto& [id, off] : sp.keypoint_offsets) {
      const Vec3 world{sp.x + off[0], sp.y + off[1], off[2]};
      const Vec3 pc = plus(mat_vec(cam.R, world), cam.t);
      if (pc[2] <= 0.0) continue;
      const Vec2 pt{cam.fx * pc[0] / pc[2] + cam.cx, cam.fy * pc[1] / pc[2] + cam.cy};

      Keypoint kp;
      kp.id = id;
      kp.x = pt.x;
      kp.y = pt.y;
      kp.confidence = 1.0;
      pa.keypoints.push_back(kp);
      min_x = std::min(min_x, pt.x);
      min_y = std::min(min_y, pt.y);
      max_x = std::max(max_x, pt.x);
      max_y = std::max(max_y, pt.y);

      const double radius = std::clamp(300.0 / pc[2], 2.0, 9.0);
      max_r = std::max(max_r, radius);
      const int x0 = std::max(0, static_cast<int>(std::floor(pt.x - radius)));
      const int x1 = std::min(scene.width - 1, static_cast<int>(std::ceil(pt.x + radius)));
      const int y0 = std::max(0, static_cast<int>(std::floor(pt.y - radius)));
      const int y1 = std::min(scene.height - 1, static_cast<int>(std::ceil(pt.y + radius)));
      for (int py = y0; py <= y1; ++py) {
        for (int px = x0; px <= x1; ++px) {
          const double dx = px - pt.x;
          const double dy = py - pt.y;
          if (dx * dx + dy * dy > radius * radius) continue;
          const std::size_t i = out.frame.index(px, py);
          out.frame.data[i] = color.r;
          out.frame.data[i + 1] = color.g;
          out.frame.data[i + 2] = color.b;
        }
      }
    }
    if (!pa.keypoints.empty()) {
      const double pad = max_r + 2.0;
      pa.bbox = {min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad};
      // Sort by id so annotation output is canonical.
      std::sort(pa.keypoints.begin(), pa.keypoints.end(),
                [](const Keypoint& a, const Keypoint& b) { return a.id < b.id; });
      out.annotations.players.push_back(std::move(pa));
    }
  }

  out.truth = true_offside(scene.players, scene.goal_side);
  out.truth.vp_true = true_vanishing_point(cam, {0.0, 1.0, 0.0});
  return out;
}

GoalSide image_goal_side(const Scene& scene) {
  const double mid_x = scene.pitch.length / 2.0;
  const double mid_y = scene.pitch.width / 2.0;
  const Vec2 p0 = project(scene.camera, {mid_x, mid_y, 0.0});
  const Vec2 p1 = project(scene.camera, {mid_x + 1.0, mid_y, 0.0});
  const bool plus_x_is_right = p1.x > p0.x;
  if (scene.goal_side == GoalSideWorld::PlusX) {
    return plus_x_is_right ? GoalSide::Right : GoalSide::Left;
  }
  return plus_x_is_right ? GoalSide::Left : GoalSide::Right;
}

Scene random_scene(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Scene scene;
  scene.frame_id = "scene_" + std::to_string(seed);
  scene.pitch.stripe_count = 12 + static_cast<int>(draw(rng, 6));

  const double L = scene.pitch.length;
  const double W = scene.pitch.width;

  // Elevated sideline camera, view direction rotated 10-45 degrees in the
  // ground plane away from straight across the pitch.
  const double yaw = (10.0 + static_cast<double>(draw(rng, 36))) * std::numbers::pi / 180.0;
  const double ex = unif(rng, 0.30 * L, 0.70 * L);
  const double ey = -unif(rng, 22.0, 40.0);
  const double ez = unif(rng, 14.0, 24.0);
  const double ty = unif(rng, 0.45 * W, 0.65 * W);
  const double ground_dist = (ty - ey) / std::cos(yaw);
  const double sign = ex <= L / 2.0 ? 1.0 : -1.0;
  const double tx = ex + sign * ground_dist * std::sin(yaw);

  const double f = unif(rng, 950.0, 1250.0);
  scene.camera = camera_look_at({ex, ey, ez}, {tx, ty, 0.0}, f, f, scene.width / 2.0,
                                scene.height / 2.0);
  scene.goal_side = draw(rng, 2) == 0 ? GoalSideWorld::PlusX : GoalSideWorld::MinusX;

  // Players on a 25 cm grid with all-distinct x, so image-space and world
  // orderings can never be separated by less than float error.
  std::set<long> taken;
  auto draw_ground = [&](double lo_frac, double hi_frac, double& px, double& py) {
    long cell = 0;
    do {
      cell = std::lround(unif(rng, lo_frac * L, hi_frac * L) / 0.25);
    } while (!taken.insert(cell).second);
    px = cell * 0.25;
    py = unif(rng, 0.10 * W, 0.90 * W);
  };

  const int n_att = 3 + static_cast<int>(draw(rng, 6));
  const int n_def = 3 + static_cast<int>(draw(rng, 6));
  for (int i = 0; i < n_att; ++i) {
    ScenePlayer p;
    p.player_id = "att" + std::to_string(i + 1);
    p.team = Team::Attacking;
    p.role = Role::Outfield;
    draw_ground(0.15, 0.85, p.x, p.y);
    p.keypoint_offsets = canonical_keypoint_offsets();
    scene.players.push_back(std::move(p));
  }
  for (int i = 0; i < n_def; ++i) {
    ScenePlayer p;
    p.player_id = "def" + std::to_string(i + 1);
    p.team = Team::Defending;
    p.role = Role::Outfield;
    draw_ground(0.15, 0.85, p.x, p.y);
    p.keypoint_offsets = canonical_keypoint_offsets();
    scene.players.push_back(std::move(p));
  }
  if (draw(rng, 2) == 0) {
    ScenePlayer gk;
    gk.player_id = "gk_def";
    gk.team = Team::Defending;
    gk.role = Role::Goalkeeper;
    gk.x = scene.goal_side == GoalSideWorld::PlusX ? 0.97 * L : 0.03 * L;
    gk.y = unif(rng, 0.40 * W, 0.60 * W);
    gk.keypoint_offsets = canonical_keypoint_offsets();
    scene.players.push_back(std::move(gk));
  }
  if (draw(rng, 2) == 0) {
    ScenePlayer ref;
    ref.player_id = "ref";
    ref.team = Team::Neutral;
    ref.role = Role::Referee;
    draw_ground(0.20, 0.80, ref.x, ref.y);
    ref.keypoint_offsets = canonical_keypoint_offsets();
    scene.players.push_back(std::move(ref));
  }
  return scene;
}

Scene degenerate_scene(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Scene scene;
  scene.frame_id = "degenerate_" + std::to_string(seed);
  scene.pitch.stripe_count = 12 + static_cast<int>(draw(rng, 6));

  const double L = scene.pitch.length;
  const double W = scene.pitch.width;
  // Behind-goal camera: eye and target share the same world y exactly, so
  // the view direction has zero y component and the stripe direction is
  // parallel to the image plane.
  const double shared_y = W / 2.0;
  const Vec3 eye{-unif(rng, 20.0, 35.0), shared_y, unif(rng, 10.0, 20.0)};
  const Vec3 target{L * 0.5, shared_y, 0.0};
  const double f = unif(rng, 950.0, 1250.0);
  scene.camera = camera_look_at(eye, target, f, f, scene.width / 2.0, scene.height / 2.0);
  scene.goal_side = GoalSideWorld::PlusX;

  std::set<long> taken;
  for (int i = 0; i < 3; ++i) {
    for (const bool attacking : {true, false}) {
      ScenePlayer p;
      p.player_id = (attacking ? "att" : "def") + std::to_string(i + 1);
      p.team = attacking ? Team::Attacking : Team::Defending;
      p.role = Role::Outfield;
      long cell = 0;
      do {
        cell = std::lround(unif(rng, 0.15 * L, 0.85 * L) / 0.25);
      } while (!taken.insert(cell).second);
      p.x = cell * 0.25;
      p.y = unif(rng, 0.10 * W, 0.90 * W);
      p.keypoint_offsets = canonical_keypoint_offsets();
      scene.players.push_back(std::move(p));
    }
  }
  return scene;
}

nlohmann::json scene_to_json(const Scene& scene) {
  using nlohmann::json;
  json players = json::array();
  for (const ScenePlayer& p : scene.players) {
    json offsets = json::object();
    for (const auto& [id, off] : p.keypoint_offsets) {
      offsets[std::to_string(id)] = off;
    }
    players.push_back({{"player_id", p.player_id},
                       {"team", to_string(p.team)},
                       {"role", to_string(p.role)},
                       {"x", p.x},
                       {"y", p.y},
                       {"offsets", std::move(offsets)}});
  }
  return json{
      {"schema", "offside-scene/1"},
      {"frame_id", scene.frame_id},
      {"width", scene.width},
      {"height", scene.height},
      {"camera",
       {{"fx", scene.camera.fx},
        {"fy", scene.camera.fy},
        {"cx", scene.camera.cx},
        {"cy", scene.camera.cy},
        {"r", scene.camera.R},
        {"t", scene.camera.t}}},
      {"pitch",
       {{"length", scene.pitch.length},
        {"width", scene.pitch.width},
        {"stripe_count", scene.pitch.stripe_count},
        {"light_rgb", scene.pitch.light_rgb},
        {"dark_rgb", scene.pitch.dark_rgb}}},
      {"goal_side_world", scene.goal_side == GoalSideWorld::PlusX ? "+x" : "-x"},
      {"players", std::move(players)},
  };
}

Scene scene_from_json(const nlohmann::json& doc) {
  using nlohmann::json;
  auto need = [](const json& obj, const char* key) -> const json& {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      raise(Errc::SchemaError, std::string("scene: missing field '") + key + "'");
    }
    return *it;
  };

  if (!doc.is_object() || need(doc, "schema").get<std::string>() != "offside-scene/1") {
    raise(Errc::SchemaError, "unsupported scene schema");
  }
  Scene scene;
  scene.frame_id = need(doc, "frame_id").get<std::string>();
  scene.width = need(doc, "width").get<int>();
  scene.height = need(doc, "height").get<int>();
  if (scene.width < 8 || scene.height < 8) raise(Errc::SchemaError, "scene dims too small");

  const json& cj = need(doc, "camera");
  scene.camera.fx = need(cj, "fx").get<double>();
  scene.camera.fy = need(cj, "fy").get<double>();
  scene.camera.cx = need(cj, "cx").get<double>();
  scene.camera.cy = need(cj, "cy").get<double>();
  scene.camera.R = need(cj, "r").get<Mat3>();
  scene.camera.t = need(cj, "t").get<Vec3>();
  try {
    validate_camera(scene.camera);
  } catch (const Error& e) {
    raise(Errc::SchemaError, std::string("scene camera: ") + e.what());
  }

  const json& pj = need(doc, "pitch");
  scene.pitch.length = need(pj, "length").get<double>();
  scene.pitch.width = need(pj, "width").get<double>();
  scene.pitch.stripe_count = need(pj, "stripe_count").get<int>();
  scene.pitch.light_rgb = need(pj, "light_rgb").get<std::array<float, 3>>();
  scene.pitch.dark_rgb = need(pj, "dark_rgb").get<std::array<float, 3>>();
  if (scene.pitch.stripe_count < 2 || scene.pitch.length <= 0 || scene.pitch.width <= 0) {
    raise(Errc::SchemaError, "scene pitch invalid");
  }

  const std::string goal = need(doc, "goal_side_world").get<std::string>();
  if (goal == "+x") {
    scene.goal_side = GoalSideWorld::PlusX;
  } else if (goal == "-x") {
    scene.goal_side = GoalSideWorld::MinusX;
  } else {
    raise(Errc::SchemaError, "goal_side_world must be '+x' or '-x'");
  }

  const json& pls = need(doc, "players");
  if (!pls.is_array()) raise(Errc::SchemaError, "scene players must be an array");
  for (const json& pl : pls) {
    ScenePlayer p;
    p.player_id = need(pl, "player_id").get<std::string>();
    p.team = team_from_string(need(pl, "team").get<std::string>());
    p.role = role_from_string(need(pl, "role").get<std::string>());
    p.x = need(pl, "x").get<double>();
    p.y = need(pl, "y").get<double>();
    for (const auto& [key, off] : need(pl, "offsets").items()) {
      const int id = std::stoi(key);
      if (id < 0 || id > 16) raise(Errc::SchemaError, "offset keypoint id out of range");
      p.keypoint_offsets[id] = off.get<Vec3>();
      if (p.keypoint_offsets[id][2] < 0.0) {
        raise(Errc::SchemaError, "keypoint offsets must have nonnegative height");
      }
    }
    scene.players.push_back(std::move(p));
  }
  return scene;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::SchemaError, path + ": " + e.what());
  }
  return scene_from_json(doc);
}

void save_scene_file(const std::string& path, const Scene& scene) {
  std::ofstream out(path);
  if (!out) raise(Errc::IoError, "cannot open " + path + " for writing");
  out << scene_to_json(scene).dump(2) << "\n";
  if (!out) raise(Errc::IoError, "write failed for " + path);
}

nlohmann::json truth_to_json(const std::string& frame_id, const GroundTruth& truth) {
  using nlohmann::json;
  json doc;
  doc["schema"] = "offside-truth/1";
  doc["frame_id"] = frame_id;
  doc["vp_true"] = truth.vp_true ? json::array({truth.vp_true->x, truth.vp_true->y})
                                 : json(nullptr);
  doc["has_defenders"] = truth.has_defenders;
  doc["last_defender_id"] = truth.has_defenders ? json(truth.last_defender_id) : json(nullptr);
  json flags = json::object();
  for (const auto& [pid, flag] : truth.offside_flags) flags[pid] = flag;
  doc["offside_flags"] = std::move(flags);
  return doc;
}

}  // namespace offside::synth

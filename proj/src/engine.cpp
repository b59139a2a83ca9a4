#include "offside/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace offside {

namespace {

// Ranking helper: larger value = further toward the goal side.
double toward_goal(double x_bottom, GoalSide side) {
  return side == GoalSide::Right ? x_bottom : -x_bottom;
}

double abs_slope(const VirtualLine& l) {
  return l.is_vertical ? std::numeric_limits<double>::infinity() : std::abs(l.slope);
}

}  // namespace

const char* to_string(GoalSide g) { return g == GoalSide::Left ? "left" : "right"; }

const char* to_string(SelectionMode m) {
  return m == SelectionMode::MinAbsSlope ? "min_abs_slope" : "bottom_intercept";
}

GoalSide goal_side_from_string(const std::string& s) {
  if (s == "left") return GoalSide::Left;
  if (s == "right") return GoalSide::Right;
  raise(Errc::ConfigError, "unknown goal_side '" + s + "'");
}

SelectionMode selection_mode_from_string(const std::string& s) {
  if (s == "min_abs_slope") return SelectionMode::MinAbsSlope;
  if (s == "bottom_intercept") return SelectionMode::BottomIntercept;
  raise(Errc::ConfigError, "unknown selection_mode '" + s + "'");
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Onside: return "onside";
    case VerdictStatus::Offside: return "offside";
    case VerdictStatus::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

FrameAnnotations filter_annotations(const FrameAnnotations& ann, const EngineConfig& cfg) {
  FrameAnnotations out;
  out.frame_id = ann.frame_id;
  for (const PlayerAnnotation& p : ann.players) {
    if (p.det_score < cfg.det_thresh) continue;
    PlayerAnnotation kept = p;
    kept.keypoints.clear();
    for (const Keypoint& kp : p.keypoints) {
      if (kp.confidence < cfg.kp_thresh) continue;
      if (!cfg.desired_ids.count(kp.id)) continue;
      kept.keypoints.push_back(kp);
    }
    if (kept.keypoints.empty()) continue;
    out.players.push_back(std::move(kept));
  }
  return out;
}

std::vector<VirtualLine> lines_through_keypoints(const VanishingPoint& vp,
                                                 const FrameAnnotations& ann, int frame_height) {
  std::vector<VirtualLine> lines;
  const double bottom_y = frame_height - 1;
  for (const PlayerAnnotation& p : ann.players) {
    for (const Keypoint& kp : p.keypoints) {
      const double dx = kp.x - vp.x;
      const double dy = kp.y - vp.y;
      if (std::abs(dx) < 1e-9 && std::abs(dy) < 1e-9) {
        raise(Errc::KeypointAtVanishingPoint,
              "keypoint " + std::to_string(kp.id) + " of '" + p.player_id +
                  "' coincides with the vanishing point");
      }
      if (std::abs(dy) < 1e-9) continue;  // parallel to the bottom row: no usable intercept

      VirtualLine vl;
      vl.owner = p.player_id;
      vl.keypoint_id = kp.id;
      vl.line = line_through({vp.x, vp.y}, {kp.x, kp.y});
      vl.is_vertical = std::abs(dx) < 1e-9;
      vl.slope = vl.is_vertical ? 0.0 : dy / dx;
      // x at y = bottom_y by similar triangles from the vanishing point.
      vl.x_bottom = vp.x + dx * (bottom_y - vp.y) / dy;
      lines.push_back(std::move(vl));
    }
  }
  return lines;
}

std::vector<VirtualLine> last_defender_lines(const std::vector<VirtualLine>& lines,
                                             const FrameAnnotations& ann,
                                             const EngineConfig& cfg) {
  std::map<std::string, const PlayerAnnotation*> players;
  for (const PlayerAnnotation& p : ann.players) players[p.player_id] = &p;

  // Extreme x_bottom per defending outfield owner; map order (player_id)
  // makes the tie on equal extremes deterministic.
  std::map<std::string, double> extreme;
  for (const VirtualLine& l : lines) {
    const auto it = players.find(l.owner);
    if (it == players.end()) continue;
    if (it->second->team != Team::Defending || it->second->role != Role::Outfield) continue;
    const double score = toward_goal(l.x_bottom, cfg.goal_side);
    const auto [pos, fresh] = extreme.try_emplace(l.owner, score);
    if (!fresh) pos->second = std::max(pos->second, score);
  }
  if (extreme.empty()) {
    raise(Errc::NoDefenders, "no defending outfield lines in frame");
  }

  std::string last;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [owner, score] : extreme) {
    if (score > best) {
      best = score;
      last = owner;
    }
  }

  std::vector<VirtualLine> out;
  for (const VirtualLine& l : lines) {
    if (l.owner == last) out.push_back(l);
  }
  return out;
}

VirtualLine select_offside_line(const std::vector<VirtualLine>& lines, const EngineConfig& cfg) {
  if (lines.empty()) raise(Errc::EmptyLineSet, "no lines to select the offside line from");
  const VirtualLine* best = &lines[0];
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const VirtualLine& cand = lines[i];
    bool better = false;
    if (cfg.selection_mode == SelectionMode::MinAbsSlope) {
      const double a = abs_slope(cand), b = abs_slope(*best);
      if (a != b) {
        better = a < b;
      } else if (cand.x_bottom != best->x_bottom) {
        better = toward_goal(cand.x_bottom, cfg.goal_side) > toward_goal(best->x_bottom, cfg.goal_side);
      } else {
        better = cand.keypoint_id < best->keypoint_id;
      }
    } else {
      const double a = toward_goal(cand.x_bottom, cfg.goal_side);
      const double b = toward_goal(best->x_bottom, cfg.goal_side);
      if (a != b) {
        better = a > b;
      } else if (abs_slope(cand) != abs_slope(*best)) {
        better = abs_slope(cand) < abs_slope(*best);
      } else {
        better = cand.keypoint_id < best->keypoint_id;
      }
    }
    if (better) best = &cand;
  }
  return *best;
}

std::vector<PlayerVerdict> classify_attackers(const VanishingPoint& vp,
                                              const VirtualLine& offside_line,
                                              const FrameAnnotations& ann,
                                              const EngineConfig& cfg, int frame_height) {
  const std::vector<VirtualLine> lines = lines_through_keypoints(vp, ann, frame_height);

  std::vector<PlayerVerdict> verdicts;
  for (const PlayerAnnotation& p : ann.players) {
    PlayerVerdict v;
    v.player_id = p.player_id;
    if (p.team != Team::Attacking || p.role != Role::Outfield) {
      v.status = VerdictStatus::NotApplicable;
      verdicts.push_back(std::move(v));
      continue;
    }
    bool any = false;
    double margin = -std::numeric_limits<double>::infinity();
    for (const VirtualLine& l : lines) {
      if (l.owner != p.player_id) continue;
      any = true;
      margin = std::max(margin, toward_goal(l.x_bottom, cfg.goal_side) -
                                    toward_goal(offside_line.x_bottom, cfg.goal_side));
    }
    if (!any) {
      v.status = VerdictStatus::NotApplicable;  // no keypoint produced a usable line
    } else {
      v.status = margin > 0.0 ? VerdictStatus::Offside : VerdictStatus::Onside;
      v.margin_px = margin;
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

FrameVerdict decide_frame(const VanishingPoint& vp, const FrameAnnotations& ann,
                          const EngineConfig& cfg, int frame_height) {
  FrameVerdict out;
  out.frame_id = ann.frame_id;
  out.vp = vp;

  const FrameAnnotations filtered = filter_annotations(ann, cfg);
  const std::vector<VirtualLine> lines = lines_through_keypoints(vp, filtered, frame_height);
  std::vector<VirtualLine> defender;
  try {
    defender = last_defender_lines(lines, filtered, cfg);
  } catch (const Error& e) {
    if (e.code() == Errc::NoDefenders) {
      out.decidable = false;
      out.reason = "no_defenders";
      return out;
    }
    throw;
  }
  out.offside_line = select_offside_line(defender, cfg);
  out.verdicts = classify_attackers(vp, *out.offside_line, filtered, cfg, frame_height);
  out.decidable = true;
  return out;
}

FrameVerdict undecidable_verdict(const std::string& frame_id, const std::string& reason) {
  FrameVerdict v;
  v.frame_id = frame_id;
  v.decidable = false;
  v.reason = reason;
  return v;
}

nlohmann::json verdict_to_json(const FrameVerdict& v) {
  using nlohmann::json;
  json doc;
  doc["schema"] = "offside/1";
  doc["frame_id"] = v.frame_id;
  doc["status"] = v.decidable ? "ok" : "undecidable";
  if (!v.decidable) doc["reason"] = v.reason;
  doc["vanishing_point"] = v.vp ? json::array({v.vp->x, v.vp->y}) : json(nullptr);
  if (v.offside_line) {
    doc["offside_line"] = {{"owner", v.offside_line->owner},
                           {"keypoint_id", v.offside_line->keypoint_id},
                           {"x_bottom", v.offside_line->x_bottom}};
  } else {
    doc["offside_line"] = nullptr;
  }
  json verdicts = json::array();
  for (const PlayerVerdict& pv : v.verdicts) {
    verdicts.push_back({{"player_id", pv.player_id},
                        {"status", to_string(pv.status)},
                        {"margin_px", pv.margin_px}});
  }
  doc["verdicts"] = std::move(verdicts);
  return doc;
}

}  // namespace offside

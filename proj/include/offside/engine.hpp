#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "offside/annotations.hpp"
#include "offside/geometry.hpp"
#include "offside/ransac.hpp"

namespace offside {

enum class GoalSide { Left, Right };
enum class SelectionMode { MinAbsSlope, BottomIntercept };

const char* to_string(GoalSide g);
const char* to_string(SelectionMode m);
GoalSide goal_side_from_string(const std::string& s);
SelectionMode selection_mode_from_string(const std::string& s);

struct EngineConfig {
  GoalSide goal_side = GoalSide::Right;
  double det_thresh = 0.7;
  double kp_thresh = 0.5;
  std::set<int> desired_ids = {5, 6, 13, 14, 15, 16};  // shoulders, knees, ankles
  SelectionMode selection_mode = SelectionMode::BottomIntercept;
};

/// The image of the field-width-parallel 3D line through one keypoint: the
/// line joining the vanishing point to the keypoint, ranked along the bottom
/// image row by where it lands there.
struct VirtualLine {
  std::string owner;
  int keypoint_id = 0;
  HomogLine line;
  double slope = 0.0;        // (ky - vy) / (kx - vx); meaningless when vertical
  bool is_vertical = false;  // |kx - vx| < 1e-9
  double x_bottom = 0.0;     // x where the line meets row frame_height - 1
};

enum class VerdictStatus { Onside, Offside, NotApplicable };

const char* to_string(VerdictStatus s);

struct PlayerVerdict {
  std::string player_id;
  VerdictStatus status = VerdictStatus::NotApplicable;
  double margin_px = 0.0;  // signed along the bottom row; positive = beyond the line toward goal
};

/// Frame-level outcome: either a full verdict set, or "undecidable" with the
/// stage reason (no_field / no_vanishing_point / no_defenders).
struct FrameVerdict {
  std::string frame_id;
  bool decidable = false;
  std::string reason;  // set when undecidable
  std::optional<VanishingPoint> vp;
  std::optional<VirtualLine> offside_line;
  std::vector<PlayerVerdict> verdicts;
};

/// Drop players below det_thresh; within survivors drop keypoints below
/// kp_thresh or outside desired_ids; drop players left with no keypoints.
FrameAnnotations filter_annotations(const FrameAnnotations& ann, const EngineConfig& cfg);

/// One VirtualLine per (player, keypoint) of the already-filtered
/// annotations. A keypoint coinciding with the vanishing point (within 1e-9)
/// is an error; a keypoint at exactly the vanishing point's y (line parallel
/// to the bottom row, so it never meets it) produces no line.
std::vector<VirtualLine> lines_through_keypoints(const VanishingPoint& vp,
                                                 const FrameAnnotations& ann, int frame_height);

/// The lines of the defending outfield player whose extreme x_bottom is
/// furthest toward goal_side (owner ties broken by smaller player_id).
/// Throws NoDefenders when no defending outfield lines exist.
std::vector<VirtualLine> last_defender_lines(const std::vector<VirtualLine>& lines,
                                             const FrameAnnotations& ann,
                                             const EngineConfig& cfg);

/// MinAbsSlope: the line with minimum |slope| (vertical = +infinity), ties
/// toward the goal-side x_bottom, then smaller keypoint id. BottomIntercept:
/// the line with extreme x_bottom toward goal_side, ties by smaller |slope|,
/// then smaller keypoint id. Throws EmptyLineSet.
VirtualLine select_offside_line(const std::vector<VirtualLine>& lines, const EngineConfig& cfg);

/// Verdict per player: attacking outfield players are offside iff any
/// desired keypoint's virtual line lands beyond the offside line toward
/// goal_side (margin > 0; exactly level is onside); everyone else is
/// not_applicable, as is an attacker none of whose keypoints yields a line.
std::vector<PlayerVerdict> classify_attackers(const VanishingPoint& vp,
                                              const VirtualLine& offside_line,
                                              const FrameAnnotations& ann,
                                              const EngineConfig& cfg, int frame_height);

/// filter -> lines -> last defender -> offside line -> verdicts, folding the
/// degenerate outcomes into an undecidable FrameVerdict instead of throwing.
FrameVerdict decide_frame(const VanishingPoint& vp, const FrameAnnotations& ann,
                          const EngineConfig& cfg, int frame_height);

/// Undecidable verdict for stages that never reached the engine.
FrameVerdict undecidable_verdict(const std::string& frame_id, const std::string& reason);

/// Verdict document ("offside/1" schema).
nlohmann::json verdict_to_json(const FrameVerdict& v);

}  // namespace offside

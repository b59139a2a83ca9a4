#pragma once

#include <string>
#include <utility>
#include <vector>

#include "offside/annotations.hpp"
#include "offside/config.hpp"
#include "offside/engine.hpp"
#include "offside/line_detect.hpp"
#include "offside/raster.hpp"

namespace offside {

/// Everything one frame produced: the verdict plus the intermediate
/// artifacts the overlay draws, and one timing entry per stage (stages not
/// reached on an undecidable frame report 0 ms, keeping the summary shape
/// uniform).
struct FrameResult {
  std::string frame_id;
  FrameVerdict verdict;
  std::vector<Segment> segments;           // angle-filtered stripe segments
  std::vector<VirtualLine> virtual_lines;  // all keypoint lines (empty if no VP)
  FrameAnnotations filtered;               // annotations after threshold/id filtering
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Stage names in execution order, as reported in FrameResult timings and
/// the sequence summary.
const std::vector<std::string>& pipeline_stage_names();

/// segmentation -> saturation plane -> edges -> Hough + angle filter ->
/// intersections -> RANSAC vanishing point -> offside engine. Degenerate
/// stage outcomes (empty field mask, too few stripe lines or intersections,
/// no defenders) fold into an undecidable verdict with reasons "no_field",
/// "no_vanishing_point", "no_defenders"; hard errors are rethrown with the
/// stage name prefixed.
FrameResult run_pipeline(const Raster& frame, const FrameAnnotations& ann,
                         const PipelineConfig& cfg);

struct FrameFailure {
  std::string frame_id;
  std::string message;
};

struct SequenceReport {
  int frames_total = 0;
  std::vector<FrameFailure> failures;  // processing continued past these
  nlohmann::json summary;              // timing percentiles, written as summary.json
};

/// Batch driver: every .png/.ppm in frame_dir (lexicographic order), each
/// paired with ann_dir/<stem>.json, processed with `jobs` worker threads.
/// Per frame it writes <stem>.verdict.json (and <stem>.overlay.png when
/// `overlay`) into out_dir, each atomically (write temp + rename), then
/// summary.json with per-stage p50/p90/p99 milliseconds. Frame failures are
/// recorded and skipped; directory-level problems throw IoError.
SequenceReport run_sequence(const std::string& frame_dir, const std::string& ann_dir,
                            const std::string& out_dir, const PipelineConfig& cfg, int jobs,
                            bool overlay);

}  // namespace offside

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "offside/config.hpp"
#include "offside/image_io.hpp"
#include "offside/overlay.hpp"
#include "offside/pipeline.hpp"
#include "offside/segmentation.hpp"
#include "offside/synth.hpp"

namespace fs = std::filesystem;
using namespace offside;

namespace {

int exit_code_for(const Error& e) {
  return (e.code() == Errc::SchemaError || e.code() == Errc::ConfigError) ? 2 : 1;
}

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

PipelineConfig effective_config(const CommonOpts& opts) {
  PipelineConfig cfg;
  if (!opts.config_path.empty()) cfg = load_config_file(opts.config_path);
  if (opts.seed_set) cfg.ransac.seed = opts.seed;
  return cfg;
}

Raster segment_frame(const Raster& frame, const PipelineConfig& cfg) {
  const BinaryMask raw = green_mask(frame, cfg.green_range);
  const BinaryMask field =
      fill_contours(external_contours(raw), cfg.min_area_frac, frame.width, frame.height);
  return apply_mask(frame, field);
}

// The lines/vp subcommands run the real pipeline on annotation-free input so
// their output can never drift from what `offside` and `run` would compute.
FrameResult analyze_frame(const Raster& frame, const PipelineConfig& cfg) {
  return run_pipeline(frame, FrameAnnotations{}, cfg);
}

void write_text_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) raise(Errc::IoError, "write failed for " + path.string());
}

int cmd_segment(const std::string& in, const std::string& out, const CommonOpts& opts) {
  const PipelineConfig cfg = effective_config(opts);
  save_image(out, segment_frame(load_image(in), cfg));
  return 0;
}

int cmd_lines(const std::string& in, const std::string& out, const CommonOpts& opts) {
  const PipelineConfig cfg = effective_config(opts);
  const Raster frame = load_image(in);
  const FrameResult result = analyze_frame(frame, cfg);
  OverlayToggles only_segments;
  only_segments.virtual_lines = only_segments.offside_line = false;
  only_segments.keypoints = only_segments.verdicts = false;
  save_image(out, draw_overlay(frame, result, only_segments));
  return 0;
}

int cmd_vp(const std::string& in, const std::string& out, const CommonOpts& opts) {
  const PipelineConfig cfg = effective_config(opts);
  const Raster frame = load_image(in);
  const FrameResult result = analyze_frame(frame, cfg);

  nlohmann::json doc;
  doc["schema"] = "offside-vp/1";
  doc["segment_count"] = result.segments.size();
  if (result.verdict.vp) {
    const VanishingPoint& vp = *result.verdict.vp;
    doc["vanishing_point"] = {vp.x, vp.y};
    doc["inlier_count"] = vp.inlier_count;
    doc["total_points"] = vp.total_points;
  } else {
    doc["vanishing_point"] = nullptr;
    doc["reason"] = result.verdict.reason;  // no_field or no_vanishing_point
  }
  write_text_file(out, doc.dump(2) + "\n");
  return 0;
}

int cmd_offside(const std::string& frame_path, const std::string& ann_path,
                const std::string& out_dir, const CommonOpts& opts, bool overlay) {
  const PipelineConfig cfg = effective_config(opts);
  const Raster frame = load_image(frame_path);
  const FrameAnnotations ann = load_annotations_file(ann_path);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) raise(Errc::IoError, "cannot create " + out_dir + ": " + ec.message());

  const FrameResult result = run_pipeline(frame, ann, cfg);
  const std::string stem = fs::path(frame_path).stem().string();
  write_text_file(fs::path(out_dir) / (stem + ".verdict.json"),
                  verdict_to_json(result.verdict).dump(2) + "\n");
  if (overlay) {
    save_image((fs::path(out_dir) / (stem + ".overlay.png")).string(),
               draw_overlay(frame, result, cfg.overlay));
  }
  return 0;
}

int cmd_run(const std::string& frame_dir, const std::string& ann_dir, const std::string& out_dir,
            const CommonOpts& opts, int jobs, bool overlay) {
  const PipelineConfig cfg = effective_config(opts);
  const SequenceReport report = run_sequence(frame_dir, ann_dir, out_dir, cfg, jobs, overlay);
  for (const FrameFailure& f : report.failures) {
    std::cerr << "error: frame " << f.frame_id << ": " << f.message << "\n";
  }
  return report.failures.empty() ? 0 : 1;
}

int cmd_synth(const std::string& scene_path, const std::string& out_dir, const CommonOpts& opts,
              bool make_random) {
  synth::Scene scene;
  if (make_random) {
    scene = synth::random_scene(opts.seed_set ? opts.seed : 0);
    synth::save_scene_file(scene_path, scene);
  } else {
    scene = synth::load_scene_file(scene_path);
  }

  const synth::RenderedScene rendered = synth::render_scene(scene);
  for (const char* sub : {"frames", "annotations", "truth"}) {
    std::error_code ec;
    fs::create_directories(fs::path(out_dir) / sub, ec);
    if (ec) raise(Errc::IoError, "cannot create " + out_dir + "/" + sub + ": " + ec.message());
  }
  save_image((fs::path(out_dir) / "frames" / (scene.frame_id + ".png")).string(), rendered.frame);
  write_text_file(fs::path(out_dir) / "annotations" / (scene.frame_id + ".json"),
                  annotations_to_json(rendered.annotations).dump(2) + "\n");
  write_text_file(fs::path(out_dir) / "truth" / (scene.frame_id + ".json"),
                  synth::truth_to_json(scene.frame_id, rendered.truth).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-camera soccer offside detector"};
  app.require_subcommand(1);

  CommonOpts opts;
  int jobs = 1;
  bool overlay = true;
  bool make_random = false;
  std::string arg_in, arg_out, arg_ann;

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* c = cmd->add_option("--config", opts.config_path, "pipeline config JSON");
    if (config_required) c->required();
    cmd->add_option("--seed", opts.seed, "override the RANSAC seed")
        ->each([&](const std::string&) { opts.seed_set = true; });
  };

  CLI::App* segment = app.add_subcommand("segment", "write the pitch-masked frame");
  segment->add_option("in", arg_in, "input frame (png/ppm)")->required();
  segment->add_option("out", arg_out, "output image")->required();
  add_common(segment, false);

  CLI::App* lines = app.add_subcommand("lines", "write the frame with detected stripe segments");
  lines->add_option("in", arg_in, "input frame (png/ppm)")->required();
  lines->add_option("out", arg_out, "output image")->required();
  add_common(lines, false);

  CLI::App* vp = app.add_subcommand("vp", "estimate the stripe vanishing point");
  vp->add_option("in", arg_in, "input frame (png/ppm)")->required();
  vp->add_option("out", arg_out, "output JSON")->required();
  add_common(vp, false);

  CLI::App* offside = app.add_subcommand("offside", "decide one frame");
  offside->add_option("frame", arg_in, "input frame (png/ppm)")->required();
  offside->add_option("annotations", arg_ann, "annotation JSON")->required();
  offside->add_option("outdir", arg_out, "output directory")->required();
  add_common(offside, true);
  offside->add_flag("--overlay,!--no-overlay", overlay, "write the overlay image (default on)");

  CLI::App* run = app.add_subcommand("run", "process a frame directory");
  run->add_option("framedir", arg_in, "directory of frames")->required();
  run->add_option("anndir", arg_ann, "directory of annotation JSON files")->required();
  run->add_option("outdir", arg_out, "output directory")->required();
  add_common(run, true);
  run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  run->add_flag("--overlay,!--no-overlay", overlay, "write overlay images (default on)");

  CLI::App* synth_cmd = app.add_subcommand("synth", "render a synthetic scene");
  synth_cmd->add_option("scene", arg_in, "scene JSON")->required();
  synth_cmd->add_option("outdir", arg_out, "output directory")->required();
  add_common(synth_cmd, false);
  synth_cmd->add_flag("--random", make_random,
                      "generate a seeded random scene, save it to <scene>, then render it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems are config errors
  }

  try {
    if (segment->parsed()) return cmd_segment(arg_in, arg_out, opts);
    if (lines->parsed()) return cmd_lines(arg_in, arg_out, opts);
    if (vp->parsed()) return cmd_vp(arg_in, arg_out, opts);
    if (offside->parsed()) return cmd_offside(arg_in, arg_ann, arg_out, opts, overlay);
    if (run->parsed()) return cmd_run(arg_in, arg_ann, arg_out, opts, jobs, overlay);
    if (synth_cmd->parsed()) return cmd_synth(arg_in, arg_out, opts, make_random);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

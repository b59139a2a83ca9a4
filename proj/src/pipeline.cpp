#include "offside/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "offside/color.hpp"
#include "offside/geometry.hpp"
#include "offside/image_io.hpp"
#include "offside/overlay.hpp"
#include "offside/ransac.hpp"
#include "offside/segmentation.hpp"

namespace offside {

namespace {

namespace fs = std::filesystem;

// Intersections of nearly parallel line pairs amplify sub-pixel line noise
// into errors of hundreds of pixels along the stripe direction, so pairs
// crossing at less than ~3.5 degrees (|sin| < 0.06) contribute no point.
constexpr double kParallelEps = 0.06;

// Edge pixels closer than this to the outside of the field mask are the
// mask's own boundary (the saturation step introduced by zeroing), not pitch
// texture; they are dropped before line extraction.
constexpr int kBorderMargin = 3;

EdgeMap interior_edges(const EdgeMap& edges, const BinaryMask& field, int margin) {
  EdgeMap out = EdgeMap::make(edges.width, edges.height);
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      if (!edges.test(x, y)) continue;
      bool interior = true;
      for (int dy = -margin; dy <= margin && interior; ++dy) {
        for (int dx = -margin; dx <= margin; ++dx) {
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= edges.width || ny >= edges.height ||
              !field.test(nx, ny)) {
            interior = false;
            break;
          }
        }
      }
      if (interior) out.set(x, y, true);
    }
  }
  return out;
}

[[noreturn]] void rethrow_with_stage(const Error& e, const std::string& stage) {
  std::string msg = e.what();
  const std::string prefix = std::string(errc_name(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  raise(e.code(), stage + " stage: " + msg);
}

class StageClock {
 public:
  explicit StageClock(FrameResult& res) : res_(res) {
    for (const std::string& name : pipeline_stage_names()) res_.timings_ms.emplace_back(name, 0.0);
  }

  template <typename Fn>
  auto time(const std::string& stage, Fn&& fn) -> decltype(fn()) {
    const auto start = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record(stage, start);
      } else {
        auto out = fn();
        record(stage, start);
        return out;
      }
    } catch (const Error& e) {
      record(stage, start);
      rethrow_with_stage(e, stage);
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    for (auto& [name, value] : res_.timings_ms) {
      if (name == stage) {
        value = ms;
        return;
      }
    }
  }

  FrameResult& res_;
};

void write_atomic(const fs::path& target, const std::string& contents) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) raise(Errc::IoError, "cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out) raise(Errc::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) raise(Errc::IoError, "rename to " + target.string() + " failed: " + ec.message());
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t rank = static_cast<std::size_t>(
      std::ceil(p / 100.0 * static_cast<double>(values.size())));
  return values[std::min(values.size() - 1, rank == 0 ? 0 : rank - 1)];
}

}  // namespace

const std::vector<std::string>& pipeline_stage_names() {
  static const std::vector<std::string> names = {"segment", "edges", "hough", "vanishing_point",
                                                 "engine"};
  return names;
}

FrameResult run_pipeline(const Raster& frame, const FrameAnnotations& ann,
                         const PipelineConfig& cfg) {
  FrameResult res;
  res.frame_id = ann.frame_id;
  StageClock clock(res);

  BinaryMask field;
  const Raster masked = clock.time("segment", [&]() -> Raster {
    const BinaryMask raw = green_mask(frame, cfg.green_range);
    const std::vector<Contour> contours = external_contours(raw);
    field = fill_contours(contours, cfg.min_area_frac, frame.width, frame.height);
    if (field.count() == 0) return Raster{};  // empty => no field found
    return apply_mask(frame, field);
  });
  if (masked.data.empty()) {
    res.verdict = undecidable_verdict(ann.frame_id, "no_field");
    return res;
  }

  const EdgeMap edges = clock.time("edges", [&]() {
    auto [h, s, v] = hsv_planes(masked);
    (void)h;
    (void)v;
    return interior_edges(canny(s, cfg.canny), field, kBorderMargin);
  });

  res.segments = clock.time("hough", [&]() {
    const std::vector<PolarLine> lines = hough_accumulate(edges, cfg.hough);
    std::vector<Segment> all;
    for (const PolarLine& line : lines) {
      std::vector<Segment> segs = extract_segments(edges, line, cfg.hough);
      all.insert(all.end(), segs.begin(), segs.end());
    }
    return filter_by_angle(all, cfg.angle_min_deg, cfg.angle_max_deg);
  });

  std::optional<VanishingPoint> vp = clock.time("vanishing_point",
                                                [&]() -> std::optional<VanishingPoint> {
    if (res.segments.size() < 2) return std::nullopt;
    std::vector<HomogLine> lines;
    lines.reserve(res.segments.size());
    for (const Segment& s : res.segments) lines.push_back(segment_to_homog(s));
    const std::vector<Vec2> points = pairwise_intersections(lines, kParallelEps);
    if (points.size() < 2) return std::nullopt;
    return ransac_vanishing_point(points, cfg.ransac);
  });
  if (!vp) {
    res.verdict = undecidable_verdict(ann.frame_id, "no_vanishing_point");
    return res;
  }

  clock.time("engine", [&]() {
    res.filtered = filter_annotations(ann, cfg.engine);
    res.verdict = decide_frame(*vp, ann, cfg.engine, frame.height);
    if (res.verdict.vp) res.virtual_lines = lines_through_keypoints(*vp, res.filtered, frame.height);
  });
  return res;
}

SequenceReport run_sequence(const std::string& frame_dir, const std::string& ann_dir,
                            const std::string& out_dir, const PipelineConfig& cfg, int jobs,
                            bool overlay) {
  if (jobs < 1) raise(Errc::ConfigError, "jobs must be >= 1");
  if (!fs::is_directory(frame_dir)) raise(Errc::IoError, frame_dir + " is not a directory");
  if (!fs::is_directory(ann_dir)) raise(Errc::IoError, ann_dir + " is not a directory");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) raise(Errc::IoError, "cannot create " + out_dir + ": " + ec.message());

  std::vector<fs::path> frames;
  for (const auto& entry : fs::directory_iterator(frame_dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".png" || ext == ".ppm") frames.push_back(entry.path());
  }
  std::sort(frames.begin(), frames.end());

  SequenceReport report;
  report.frames_total = static_cast<int>(frames.size());

  std::mutex mu;  // guards failures + timing accumulators
  std::map<std::string, std::vector<double>> stage_ms;
  std::vector<double> total_ms;
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= frames.size()) return;
      const fs::path& frame_path = frames[i];
      const std::string stem = frame_path.stem().string();
      try {
        const Raster frame = load_image(frame_path.string());
        const FrameAnnotations ann =
            load_annotations_file((fs::path(ann_dir) / (stem + ".json")).string());
        FrameResult result = run_pipeline(frame, ann, cfg);

        write_atomic(fs::path(out_dir) / (stem + ".verdict.json"),
                     verdict_to_json(result.verdict).dump(2) + "\n");
        if (overlay) {
          const Raster composed = draw_overlay(frame, result, cfg.overlay);
          const fs::path target = fs::path(out_dir) / (stem + ".overlay.png");
          const fs::path tmp = target.string() + ".tmp.png";
          save_image(tmp.string(), composed);
          std::error_code rec;
          fs::rename(tmp, target, rec);
          if (rec) raise(Errc::IoError, "rename failed: " + rec.message());
        }

        double total = 0.0;
        std::lock_guard<std::mutex> lock(mu);
        for (const auto& [name, value] : result.timings_ms) {
          stage_ms[name].push_back(value);
          total += value;
        }
        total_ms.push_back(total);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu);
        report.failures.push_back({stem, e.what()});
      }
    }
  };

  const int n_workers = std::max(1, std::min<int>(jobs, static_cast<int>(frames.size())));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  nlohmann::json stages = nlohmann::json::object();
  for (const std::string& name : pipeline_stage_names()) {
    std::vector<double>& values = stage_ms[name];
    stages[name] = {{"p50", percentile(values, 50.0)},
                    {"p90", percentile(values, 90.0)},
                    {"p99", percentile(values, 99.0)}};
  }
  report.summary = {
      {"schema", "offside-summary/1"},
      {"frames", report.frames_total},
      {"failed", static_cast<int>(report.failures.size())},
      {"stage_ms", std::move(stages)},
      {"total_ms",
       {{"p50", percentile(total_ms, 50.0)},
        {"p90", percentile(total_ms, 90.0)},
        {"p99", percentile(total_ms, 99.0)}}},
  };
  write_atomic(fs::path(out_dir) / "summary.json", report.summary.dump(2) + "\n");
  return report;
}

}  // namespace offside

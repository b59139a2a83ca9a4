#include "offside/raster.hpp"

#include "offside/error.hpp"

namespace offside {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ChannelMismatch: return "channel_mismatch";
    case Errc::NegativeSigma: return "negative_sigma";
    case Errc::ImageTooSmall: return "image_too_small";
    case Errc::DimensionMismatch: return "dimension_mismatch";
    case Errc::BadThresholds: return "bad_thresholds";
    case Errc::BadAngleWindow: return "bad_angle_window";
    case Errc::DegenerateSegment: return "degenerate_segment";
    case Errc::TooFewLines: return "too_few_lines";
    case Errc::TooFewPoints: return "too_few_points";
    case Errc::SchemaError: return "schema_error";
    case Errc::DuplicateKeypoint: return "duplicate_keypoint";
    case Errc::DuplicatePlayer: return "duplicate_player";
    case Errc::KeypointAtVanishingPoint: return "keypoint_at_vanishing_point";
    case Errc::NoDefenders: return "no_defenders";
    case Errc::EmptyLineSet: return "empty_line_set";
    case Errc::BehindCamera: return "behind_camera";
    case Errc::ZeroDirection: return "zero_direction";
    case Errc::DegenerateCamera: return "degenerate_camera";
    case Errc::IoError: return "io_error";
    case Errc::ConfigError: return "config_error";
  }
  return "unknown";
}

}  // namespace offside

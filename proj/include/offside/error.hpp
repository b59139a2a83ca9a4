#pragma once

#include <stdexcept>
#include <string>

namespace offside {

/// Every failure the library can signal, one code per contract violation.
enum class Errc {
  ChannelMismatch,
  NegativeSigma,
  ImageTooSmall,
  DimensionMismatch,
  BadThresholds,
  BadAngleWindow,
  DegenerateSegment,
  TooFewLines,
  TooFewPoints,
  SchemaError,
  DuplicateKeypoint,
  DuplicatePlayer,
  KeypointAtVanishingPoint,
  NoDefenders,
  EmptyLineSet,
  BehindCamera,
  ZeroDirection,
  DegenerateCamera,
  IoError,
  ConfigError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace offside

#pragma once

#include <stdexcept>
#include <string>

namespace lowpoly {

enum class ErrorKind {
  Parameter,   // out-of-range or malformed configuration
  Degenerate,  // too few points, collinear input, image too small
  Decode,      // malformed image stream
  Io,          // filesystem failures
};

/// Library-wide exception. `stage` is filled in by the pipeline so callers can
/// report which step failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string stage = {})
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorKind kind_;
  std::string stage_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Decode: return "decode";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace lowpoly

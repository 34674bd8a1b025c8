#pragma once

#include <stdexcept>
#include <string>

namespace latiso {

enum class ErrorKind {
  EmptySet,
  EmptyBox,
  InvalidSize,
  NoSuchBoundary,
  NotMinimal,
  HypothesisFailed,
  SizeTooLarge,
  CoordinateOverflow,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::EmptyBox: return "EmptyBox";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::NoSuchBoundary: return "NoSuchBoundary";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::CoordinateOverflow: return "CoordinateOverflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latiso

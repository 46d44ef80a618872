#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace globk {

enum class ErrorKind {
  MissingCell,
  GlobularViolation,
  DimOutOfRange,
  ParseError,
  ShapeViolation,
  IndexOutOfRange,
  NotComposable,
  InversesAbsent,
  GluingViolation,
  NotAGroup,
  NotAbelian,
  NotNatural,
  InvalidStructure,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingCell: return "MissingCell";
    case ErrorKind::GlobularViolation: return "GlobularViolation";
    case ErrorKind::DimOutOfRange: return "DimOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InversesAbsent: return "InversesAbsent";
    case ErrorKind::GluingViolation: return "GluingViolation";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
  }
  return "Unknown";
}

/// Every failure raised by the kernel carries one of the kinds above, so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace globk

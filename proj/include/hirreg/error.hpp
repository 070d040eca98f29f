#pragma once

#include <stdexcept>
#include <string>

namespace hirreg {

enum class ErrorCode {
  InvalidParameter,
  InvalidEdge,
  OutOfScope,
  MalformedFamily,
  IncompleteLabeling,
  ResourceLimit,
  Parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InvalidEdge: return "invalid-edge";
    case ErrorCode::OutOfScope: return "out-of-scope";
    case ErrorCode::MalformedFamily: return "malformed-family";
    case ErrorCode::IncompleteLabeling: return "incomplete-labeling";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hirreg

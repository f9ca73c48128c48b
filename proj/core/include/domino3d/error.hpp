#pragma once

#include <stdexcept>
#include <string>

namespace domino3d {

enum class ErrorCode {
  EmptyFloor,
  NotSimplyConnected,
  ParseError,
  DoesNotFit,
  InvalidSite,
  InconsistentGhosts,
  NoRoute,
  PointOnCurve,
  PatternMismatch,
  OutsideDomain,
  NotUntangled,
  InvalidSock,
  Unbalanced,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace domino3d

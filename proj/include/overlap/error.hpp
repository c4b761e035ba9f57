#pragma once

#include <stdexcept>
#include <string>

namespace overlap {

enum class ErrorCode {
  NotClosedOrthogonal,
  SelfIntersecting,
  DegenerateArea,
  TooFewVertices,
  CoordinateOutOfRange,
  QueryOffGrid,
  EmptyInput,
  InstanceTooLarge,
  GenerationFailed,
  NonSimpleInput,
  ParseError,
};

const char* error_name(ErrorCode c);

class OverlapError : public std::runtime_error {
 public:
  OverlapError(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace overlap

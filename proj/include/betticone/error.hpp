#pragma once

#include <stdexcept>
#include <string>

namespace betticone {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NonIncreasingDegrees,
  InternalInconsistency,
  CollapsedSurvivor,
  NoCollapsibleWindow,
  NotInConeCandidate,
  NotOnHyperplane,
  DegenerateSequence,
  NotFiniteLength,
  NotContained,
  NotFiniteLengthWithinBox,
  KernelNotFinitelyResolvedInBox,
  NotCommutative,
  BoundTooLarge,
};

const char* to_string(ErrorCode code);

/// Domain error. The CLI maps every Error to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace betticone

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sandpile {

enum class ErrorCode {
  SelfLoop,
  Disconnected,
  IndexOutOfRange,
  EmptyGraph,
  SizeTooSmall,
  NotSquare,
  Singular,
  SizeMismatch,
  TooLarge,
  SinkNotAllowed,
  InvalidSandpile,
  NotUniformlyLarge,
  NotConeOfRegular,
  CriterionInapplicable,
  HypothesesFail,
  NotTree,
  NotPowerOfTwo,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The code is stable and
/// appears verbatim in the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sandpile

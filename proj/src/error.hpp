#pragma once

#include <stdexcept>
#include <string>

namespace meetpoint {

// Mirrors mp_status in the C API one-to-one (same order, Ok excluded).
enum class ErrorCode {
  InvalidArgument = 1,
  InvalidEdgeEndpoint,
  NegativeWeight,
  EmptyChannelList,
  UnknownChannel,
  InvalidSource,
  EmptySources,
  UnknownCharacter,
  NoUsers,
  EmptyMap,
  EmptyMatrix,
  ZeroSum,
  NonFiniteEntry,
  AllZeroScores,
  ShapeMismatch,
  LengthMismatch,
  NoMutuallyReachableVertex,
  NoCandidate,
  UnreachableDestination,
  MaxTicksExceeded,
  Timeout,
  Parse,
  Io,
  InconsistentTrace,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace meetpoint

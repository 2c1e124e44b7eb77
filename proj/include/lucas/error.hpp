#pragma once

#include <stdexcept>
#include <string>

namespace lucas {

enum class ErrorCode {
  MalformedDocument,
  InvalidMap,
  LoopEdge,
  NotConnected,
  OddDegreeVertex,
  ArityMismatch,
  IndexOutOfRange,
  DuplicateDistinguished,
  NotDistinguishedEndpoints,
  LimitExceeded,
  TooSmall,
  TooLarge,
  InvalidAsm,
  InvalidColoring,
  ColumnInconsistent,
  WordLengthMismatch,
  NotCoverPair,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message names the offending entity (dart, vertex, index, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lucas

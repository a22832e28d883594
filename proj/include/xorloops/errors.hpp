#pragma once

#include <stdexcept>
#include <string>

namespace xorloops {

enum class ErrorCode {
  NonInvolution,
  NotAPermutation,
  Disconnected,
  OddEulerDefect,
  UnknownKind,
  BadSpec,
  OverlappingBlocks,
  NotADisc,
  SameSide,
  NotACycle,
  ClassMismatch,
  NotNullHomologous,
  InvalidLocalConfig,
  NotAMatching,
  NotSimplyConnected,
  SignSystemInfeasible,
  SingularSignTable,
  OutOfRange,
  SizeGuard,
  IrrationalWeight,
  NoCoordinates,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Throws SizeGuard when `value > bound`; the message names both numbers.
void size_guard(const char* what, std::size_t value, std::size_t bound);

}  // namespace xorloops

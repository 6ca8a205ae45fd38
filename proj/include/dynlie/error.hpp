#pragma once

#include <stdexcept>
#include <string>

namespace dynlie {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NonFinite,
  NotSkewHermitian,
  NotTraceless,
  HypothesisViolated,
  NotConverged,
  NotMember,
  // Input-side failures (reported by the CLI with a separate exit code).
  Io,
  MalformedJson,
  BadToken,
  LengthMismatch,
  EnergiesDecreasing,
};

const char* to_string(ErrorCode code) noexcept;

/// True for errors caused by the user's input files rather than by numerics.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dynlie

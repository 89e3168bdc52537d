#pragma once

#include <stdexcept>
#include <string>

namespace sdwave {

enum class ErrorCode {
  InvalidArgument,
  RegimeMismatch,
  SingularAtZero,
  OutOfRealBranch,
  NonIntegrableSingularity,
  TolNotMet,
  StepUnderflow,
  InsufficientPoints,
  BandViolation,
  NoDecayBound,
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace sdwave

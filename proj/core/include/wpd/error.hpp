#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wpd {

enum class ErrorCode {
  NonHermitian,
  NotPositive,
  BadTrace,
  NoConvergence,
  DimensionMismatch,
  UnknownFunction,
  InvalidFunction,
  DomainError,
  BadSpectrum,
  BadParameters,
  BlochOutOfBall,
  UnknownName,
  BadConfig,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Numerical failures (as opposed to bad input) map to a distinct CLI exit code.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wpd

#include "wpd/error.hpp"

namespace wpd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::BadTrace: return "BadTrace";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::InvalidFunction: return "InvalidFunction";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadSpectrum: return "BadSpectrum";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BlochOutOfBall: return "BlochOutOfBall";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  return code == ErrorCode::NoConvergence || code == ErrorCode::BadSpectrum;
}

}  // namespace wpd

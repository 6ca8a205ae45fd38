#include "dynlie/error.hpp"

namespace dynlie {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::NotSkewHermitian: return "not_skew_hermitian";
    case ErrorCode::NotTraceless: return "not_traceless";
    case ErrorCode::HypothesisViolated: return "hypothesis_violated";
    case ErrorCode::NotConverged: return "not_converged";
    case ErrorCode::NotMember: return "not_member";
    case ErrorCode::Io: return "io";
    case ErrorCode::MalformedJson: return "malformed_json";
    case ErrorCode::BadToken: return "bad_token";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::EnergiesDecreasing: return "energies_decreasing";
  }
  return "unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Io:
    case ErrorCode::MalformedJson:
    case ErrorCode::BadToken:
    case ErrorCode::LengthMismatch:
    case ErrorCode::EnergiesDecreasing:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace dynlie

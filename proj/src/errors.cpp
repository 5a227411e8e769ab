#include "quadheis/errors.hpp"

namespace quadheis {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::SingularS: return "SingularS";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::SymplecticViolation: return "SymplecticViolation";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::NotRealSymmetric: return "NotRealSymmetric";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DivergentState: return "DivergentState";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

static std::string compose_message(ErrorCode code, const std::string& stage,
                                   const std::string& detail) {
  std::string msg = std::string(to_string(code)) + " in " + stage;
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

DomainError::DomainError(ErrorCode code, std::string stage, const std::string& detail)
    : std::runtime_error(compose_message(code, stage, detail)),
      code_(code),
      stage_(std::move(stage)),
      detail_(detail) {}

DomainError DomainError::within(const std::string& outer) const {
  return DomainError(code_, outer + "/" + stage_, detail_);
}

}  // namespace quadheis

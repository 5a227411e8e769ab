#pragma once

#include <stdexcept>
#include <string>

namespace quadheis {

enum class ErrorCode {
  SingularInput,
  BranchCut,
  SingularS,
  NonConvergence,
  DimensionMismatch,
  AsymmetricInput,
  SymplecticViolation,
  NotProjection,
  NonCommuting,
  NotRealSymmetric,
  BadOrder,
  DivergentState,
  EmptyInput,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Mathematical domain failure. The stage names the operation (or pipeline
// step) that rejected its input, so composite calls can localize failures.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, std::string stage, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& detail() const noexcept { return detail_; }

  // Same error, stage prefixed with an outer pipeline step.
  DomainError within(const std::string& outer) const;

 private:
  ErrorCode code_;
  std::string stage_;
  std::string detail_;
};

}  // namespace quadheis

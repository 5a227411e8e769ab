#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadheis/cmatrix.hpp"

namespace quadheis {

// Outcome of one acceptance criterion. worst_ratio is the largest
// residual / tolerance over all comparisons, so it is <= 1 exactly when every
// numeric comparison passed.
struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  long checks;
  long failures;
  double worst_ratio;
  std::string note;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::string suite = "all";  // "all", a suite name, or its number
  Tolerances tol;
};

// Names indexed by criterion id - 1.
const std::vector<std::string>& suite_names();

// Throws DomainError(InvalidArgument) for an unknown suite.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

}  // namespace quadheis

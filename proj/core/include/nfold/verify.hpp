#pragma once

#include <string>
#include <vector>

#include "nfold/trace.hpp"

namespace nfold {

struct VerificationFailure {
  int step_index = 0;
  std::string constraint;
  double residual = 0.0;
};

struct VerificationReport {
  bool ok = false;
  double max_residual = 0.0;
  std::vector<VerificationFailure> failures;
};

/// Recompute every declared incidence of the trace from scratch with the
/// plane-geometry primitives.  Structural problems (dangling names, empty
/// steps, bad fold indices) throw trace_error; numeric violations are
/// reported.  ok holds iff max_residual <= tol.eps_incidence.
VerificationReport verify(const FoldTrace& trace, const Tolerance& tol = {});

}  // namespace nfold

#pragma once

#include <stdexcept>
#include <string>

namespace nfold {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate or precondition-violating geometric input (coincident points,
/// wrong arity, angle outside the accepted range, ...).
class invalid_input : public error {
 public:
  using error::error;
};

/// A numeric procedure failed to reach its accuracy target (root not found,
/// constructed value too far from its reference).
class numeric_failure : public error {
 public:
  using error::error;
};

/// Structurally malformed fold trace (dangling name, empty step).  Distinct
/// from numeric verification failure, which is reported, not thrown.
class trace_error : public error {
 public:
  using error::error;
};

/// JSON schema or version mismatch.
class schema_error : public error {
 public:
  using error::error;
};

/// Input outside the supported range (e.g. factorization bound exceeded).
class unsupported_input : public error {
 public:
  using error::error;
};

}  // namespace nfold

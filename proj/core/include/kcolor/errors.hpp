#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kcolor {

// Base error with a machine-readable code. The CLI maps input and usage
// errors to exit code 1 and planner-level failures to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input text; the message carries the location.
struct ParseError : Error {
  ParseError(const std::string& where, const std::string& message)
      : Error("parse_error", where + ": " + message) {}
};

// Structurally well-formed input that violates a documented requirement.
// The code identifies the specific requirement, e.g. "start_overlap".
struct ValidationError : Error {
  ValidationError(std::string reason, const std::string& message)
      : Error(std::move(reason), message) {}
};

// A placement references an out-of-range vertex or stacks two pebbles.
struct InvalidPlacementError : Error {
  explicit InvalidPlacementError(const std::string& message)
      : Error("invalid_placement", message) {}
};

// Two placements compared or solved against each other differ in size.
struct SizeMismatchError : Error {
  explicit SizeMismatchError(const std::string& message)
      : Error("size_mismatch", message) {}
};

// Pebble start and target placements lie in different equivalence classes.
struct NotEquivalentError : Error {
  explicit NotEquivalentError(const std::string& message)
      : Error("not_equivalent", message) {}
};

// Rejection sampling hit its global attempt budget before filling quotas.
struct SamplingExhaustedError : Error {
  explicit SamplingExhaustedError(const std::string& message)
      : Error("sampling_exhausted", message) {}
};

// Brute-force search would exceed its configured state budget.
struct StateSpaceTooLargeError : Error {
  explicit StateSpaceTooLargeError(const std::string& message)
      : Error("state_space_too_large", message) {}
};

// A query's start or target configuration is malformed or colliding.
struct InvalidQueryError : Error {
  explicit InvalidQueryError(const std::string& message)
      : Error("invalid_query", message) {}
};

// Cooperative deadline expired inside the planner.
struct TimedOutError : Error {
  explicit TimedOutError(const std::string& message)
      : Error("timed_out", message) {}
};

// Broken internal invariant; indicates a defect, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& message)
      : Error("internal_error", message) {}
};

}  // namespace kcolor

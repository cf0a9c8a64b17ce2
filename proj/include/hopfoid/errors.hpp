#pragma once

#include <stdexcept>
#include <string>

namespace hopfoid {

// Load-time data errors (exit code 2 territory).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : ConfigError {
  int line, col;
  ParseError(int line_, int col_, const std::string& what_)
      : ConfigError("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                    ": " + what_),
        line(line_),
        col(col_) {}
};

struct InvalidGroup : ConfigError {
  using ConfigError::ConfigError;
};

struct JacobiViolation : ConfigError {
  using ConfigError::ConfigError;
};

// Programming/contract errors.
struct ContextMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct InfiniteWindow : std::logic_error {
  using std::logic_error::logic_error;
};

struct WindowExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coaction solver outcomes that invalidate the whole run (window too small,
// or the constraint system does not pin the coaction down).
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUniqueSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structure whose construction-time self-verification failed; always a
// build defect, never a recoverable configuration problem.
struct StructureInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hopfoid

#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Error hierarchy for the library. Every condition a caller can provoke has
// its own type so the CLI can map it to a message and exit status.

struct InvalidSyndrome : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonCycleInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInSublattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TraceMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace toric

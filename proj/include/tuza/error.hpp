#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tuza {

enum class ErrorKind {
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  InvalidSpec,
  EmptyGraph,
  BudgetExceeded,
  LpTooLarge,
  BadThreshold,
  MismatchedInstance,
  InsufficientDensity,
  NotTargetFree,
  ConfigInvalid,
  OutputUnwritable,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Process exit code for the CLI: 2 invalid input, 3 budget exceeded,
/// 4 internal invariant violation.
int exit_code(ErrorKind kind);

// Throws InvariantViolation; used for post-condition checks that must never fire.
void ensure(bool condition, const std::string& what);

}  // namespace tuza

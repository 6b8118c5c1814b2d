#include "tuza/error.hpp"

namespace tuza {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::LpTooLarge: return "LpTooLarge";
    case ErrorKind::BadThreshold: return "BadThreshold";
    case ErrorKind::MismatchedInstance: return "MismatchedInstance";
    case ErrorKind::InsufficientDensity: return "InsufficientDensity";
    case ErrorKind::NotTargetFree: return "NotTargetFree";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::OutputUnwritable: return "OutputUnwritable";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return 3;
    case ErrorKind::InvariantViolation: return 4;
    default: return 2;
  }
}

void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace tuza

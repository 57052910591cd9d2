#include "jobshop/error.hpp"

#include <sstream>

namespace jobshop {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_count: return "malformed-count";
    case ErrorKind::machine_index_out_of_range: return "machine-index-out-of-range";
    case ErrorKind::nonpositive_duration: return "nonpositive-duration";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::repeated_machine: return "repeated-machine";
    case ErrorKind::duplicate_name: return "duplicate-name";
    case ErrorKind::duplicate_assignment: return "duplicate-assignment";
    case ErrorKind::nonpositive_value: return "nonpositive-value";
    case ErrorKind::missing_operation: return "missing-operation";
    case ErrorKind::unknown_operation: return "unknown-operation";
    case ErrorKind::stale_best_known: return "stale-best-known";
    case ErrorKind::infeasible_schedule: return "infeasible-schedule";
    case ErrorKind::size_guard_exceeded: return "size-guard-exceeded";
    case ErrorKind::inconsistent_subproblem: return "inconsistent-subproblem";
    case ErrorKind::bad_config: return "bad-config";
    case ErrorKind::empty_group: return "empty-group";
    case ErrorKind::io_failure: return "io-failure";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, int line, int column) {
  std::ostringstream out;
  out << to_string(kind) << ": " << message;
  if (line > 0) {
    out << " (line " << line;
    if (column > 0) out << ", column " << column;
    out << ")";
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(compose(kind, message, line, column)),
      kind_(kind),
      line_(line),
      column_(column) {}

void fail(ErrorKind kind, const std::string& message, int line, int column) {
  throw Error(kind, message, line, column);
}

}  // namespace jobshop

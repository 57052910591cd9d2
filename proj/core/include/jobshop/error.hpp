#ifndef JOBSHOP_ERROR_HPP
#define JOBSHOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jobshop {

// Error taxonomy shared by parsers, solvers and the pipeline. Tests and the
// CLI dispatch on the kind; the message is for humans.
enum class ErrorKind {
  malformed_count,
  machine_index_out_of_range,
  nonpositive_duration,
  dimension_mismatch,
  repeated_machine,
  duplicate_name,
  duplicate_assignment,
  nonpositive_value,
  missing_operation,
  unknown_operation,
  stale_best_known,
  infeasible_schedule,
  size_guard_exceeded,
  inconsistent_subproblem,
  bad_config,
  empty_group,
  io_failure,
  internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0, int column = 0);

  ErrorKind kind() const { return kind_; }
  // 1-based position in the input stream; 0 when not applicable.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message, int line = 0,
                       int column = 0);

}  // namespace jobshop

#endif

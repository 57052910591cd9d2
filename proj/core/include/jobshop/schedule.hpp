#ifndef JOBSHOP_SCHEDULE_HPP
#define JOBSHOP_SCHEDULE_HPP

#include <string>
#include <vector>

#include "jobshop/instance.hpp"

namespace jobshop {

// Start times per operation; kUnscheduled marks operations not yet placed.
// A complete schedule assigns every operation; pipeline internals also work
// with prefix-closed partial schedules.
class Schedule {
 public:
  static constexpr Time kUnscheduled = -1;

  Schedule() = default;
  explicit Schedule(int op_count) : start_(op_count, kUnscheduled) {}

  int size() const { return static_cast<int>(start_.size()); }
  bool has(OpId op) const { return start_[op] != kUnscheduled; }
  Time start(OpId op) const { return start_[op]; }
  void set(OpId op, Time t) { start_[op] = t; }
  void clear(OpId op) { start_[op] = kUnscheduled; }

  int scheduled_count() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Time> start_;
};

inline Time completion(const Instance& instance, const Schedule& schedule, OpId op) {
  return schedule.start(op) + instance.op(op).duration;
}

struct Violation {
  enum class Kind { missing_start, precedence, overlap };
  Kind kind;
  OpId a = -1;  // the operation at fault (precedence: the successor)
  OpId b = -1;  // counterpart (precedence: the predecessor; overlap: the clashing op)

  std::string describe(const Instance& instance) const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Full feasibility check: every operation must be scheduled, job chains must
// run in order, and per-machine intervals must not overlap.
ValidationReport validate(const Instance& instance, const Schedule& schedule);

// Same checks restricted to the scheduled subset. A scheduled operation whose
// job predecessor is unscheduled is reported as missing_start.
ValidationReport validate_scheduled(const Instance& instance, const Schedule& schedule);

// Max completion over scheduled operations; 0 when nothing is scheduled.
Time makespan(const Instance& instance, const Schedule& schedule);

// Percentage excess over the best-known value. Throws stale_best_known when
// makespan < best_known and nonpositive_value when best_known < 1. The result
// is rounded to two decimals, the reporting precision used everywhere.
double gap_to_best(Time makespan, Time best_known);

// Fixed two-decimal rendering used by the CSV emitter and the CLI.
std::string format_gap(double gap_pct);

// max(max machine load, max job duration sum): every feasible schedule's
// makespan is at least this.
Time trivial_lower_bound(const Instance& instance);

}  // namespace jobshop

#endif

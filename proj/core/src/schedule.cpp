#include "jobshop/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace jobshop {

int Schedule::scheduled_count() const {
  return static_cast<int>(std::count_if(start_.begin(), start_.end(),
                                        [](Time t) { return t != kUnscheduled; }));
}

std::string Violation::describe(const Instance& instance) const {
  auto name = [&](OpId id) {
    const Operation& op = instance.op(id);
    std::ostringstream out;
    out << "J" << op.job << "O" << op.pos << "(M" << op.machine << ",d" << op.duration
        << ")";
    return out.str();
  };
  std::ostringstream out;
  switch (kind) {
    case Kind::missing_start:
      out << "missing start for " << name(a);
      break;
    case Kind::precedence:
      out << name(a) << " starts before its job predecessor " << name(b) << " completes";
      break;
    case Kind::overlap:
      out << name(a) << " overlaps " << name(b) << " on machine "
          << instance.op(a).machine;
      break;
  }
  return out.str();
}

namespace {

void check_scheduled_ops(const Instance& instance, const Schedule& schedule,
                         ValidationReport& report) {
  // Job precedence over the scheduled subset.
  for (OpId id = 0; id < instance.op_count(); ++id) {
    if (!schedule.has(id)) continue;
    OpId pred = instance.job_pred(id);
    if (pred < 0) continue;
    if (!schedule.has(pred)) {
      report.violations.push_back({Violation::Kind::missing_start, pred, id});
      continue;
    }
    if (schedule.start(id) < completion(instance, schedule, pred)) {
      report.violations.push_back({Violation::Kind::precedence, id, pred});
    }
  }

  // Machine exclusivity: sort each machine's scheduled ops by start and check
  // consecutive intervals.
  std::vector<std::vector<OpId>> per_machine(instance.machine_count());
  for (OpId id = 0; id < instance.op_count(); ++id) {
    if (schedule.has(id)) per_machine[instance.op(id).machine].push_back(id);
  }
  for (auto& ops : per_machine) {
    std::sort(ops.begin(), ops.end(), [&](OpId lhs, OpId rhs) {
      if (schedule.start(lhs) != schedule.start(rhs))
        return schedule.start(lhs) < schedule.start(rhs);
      return lhs < rhs;
    });
    for (std::size_t i = 1; i < ops.size(); ++i) {
      if (schedule.start(ops[i]) < completion(instance, schedule, ops[i - 1])) {
        report.violations.push_back({Violation::Kind::overlap, ops[i], ops[i - 1]});
      }
    }
  }
}

}  // namespace

ValidationReport validate(const Instance& instance, const Schedule& schedule) {
  ValidationReport report;
  for (OpId id = 0; id < instance.op_count(); ++id) {
    if (!schedule.has(id)) {
      report.violations.push_back({Violation::Kind::missing_start, id, -1});
    }
  }
  check_scheduled_ops(instance, schedule, report);
  return report;
}

ValidationReport validate_scheduled(const Instance& instance, const Schedule& schedule) {
  ValidationReport report;
  check_scheduled_ops(instance, schedule, report);
  return report;
}

Time makespan(const Instance& instance, const Schedule& schedule) {
  Time result = 0;
  for (OpId id = 0; id < instance.op_count(); ++id) {
    if (schedule.has(id)) result = std::max(result, completion(instance, schedule, id));
  }
  return result;
}

double gap_to_best(Time makespan, Time best_known) {
  if (best_known < 1) {
    fail(ErrorKind::nonpositive_value,
         "best-known makespan must be >= 1, got " + std::to_string(best_known));
  }
  if (makespan < best_known) {
    fail(ErrorKind::stale_best_known,
         "makespan " + std::to_string(makespan) + " beats best-known " +
             std::to_string(best_known) + "; table is stale or schedule infeasible");
  }
  double raw = 100.0 * (makespan - best_known) / static_cast<double>(best_known);
  return std::round(raw * 100.0) / 100.0;
}

std::string format_gap(double gap_pct) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", gap_pct);
  return buffer;
}

Time trivial_lower_bound(const Instance& instance) {
  std::vector<Time> machine_load(instance.machine_count(), 0);
  Time best = 0;
  for (int job = 0; job < instance.job_count(); ++job) {
    Time job_work = 0;
    for (const Operation& op : instance.job_chain(job)) {
      machine_load[op.machine] += op.duration;
      job_work += op.duration;
    }
    best = std::max(best, job_work);
  }
  for (Time load : machine_load) best = std::max(best, load);
  return best;
}

}  // namespace jobshop

#include "jobshop/dispatch.hpp"

#include <algorithm>
#include <tuple>

namespace jobshop {

PriorityRule parse_rule(const std::string& text) {
  if (text == "fifo") return PriorityRule::fifo;
  if (text == "mtwr") return PriorityRule::mtwr;
  if (text == "spt") return PriorityRule::spt;
  fail(ErrorKind::bad_config, "unknown priority rule '" + text + "'");
}

const char* to_string(PriorityRule rule) {
  switch (rule) {
    case PriorityRule::fifo: return "fifo";
    case PriorityRule::mtwr: return "mtwr";
    case PriorityRule::spt: return "spt";
  }
  return "?";
}

Time remaining_work(const Instance& instance, OpId op) {
  if (op < 0 || op >= instance.op_count()) {
    fail(ErrorKind::unknown_operation, "operation id " + std::to_string(op));
  }
  const Operation& o = instance.op(op);
  Time sum = 0;
  for (int pos = o.pos; pos < instance.chain_length(o.job); ++pos) {
    sum += instance.op(instance.id(o.job, pos)).duration;
  }
  return sum;
}

std::vector<Time> remaining_work_table(const Instance& instance) {
  std::vector<Time> table(instance.op_count(), 0);
  for (int job = 0; job < instance.job_count(); ++job) {
    Time suffix = 0;
    for (int pos = instance.chain_length(job) - 1; pos >= 0; --pos) {
      OpId id = instance.id(job, pos);
      suffix += instance.op(id).duration;
      table[id] = suffix;
    }
  }
  return table;
}

Schedule generate_nondelay(const Instance& instance, PriorityRule rule) {
  const int jobs = instance.job_count();
  Schedule schedule(instance.op_count());
  std::vector<int> next_pos(jobs, 0);
  std::vector<Time> job_ready(jobs, 0);  // completion of the job's last placed op
  std::vector<Time> machine_free(instance.machine_count(), 0);
  std::vector<Time> remaining = remaining_work_table(instance);

  int left = instance.op_count();
  while (left > 0) {
    // Earliest possible start over every job's next operation.
    Time sigma = 0;
    bool found = false;
    for (int job = 0; job < jobs; ++job) {
      if (next_pos[job] >= instance.chain_length(job)) continue;
      OpId id = instance.id(job, next_pos[job]);
      Time s = std::max(job_ready[job], machine_free[instance.op(id).machine]);
      if (!found || s < sigma) sigma = s, found = true;
    }

    // Among candidates startable at sigma, pick by rule value, then shorter
    // duration, then job, then pos.
    OpId chosen = -1;
    std::tuple<Time, Time, int, int> best_key{};
    for (int job = 0; job < jobs; ++job) {
      if (next_pos[job] >= instance.chain_length(job)) continue;
      OpId id = instance.id(job, next_pos[job]);
      const Operation& op = instance.op(id);
      if (std::max(job_ready[job], machine_free[op.machine]) != sigma) continue;
      Time primary = 0;
      switch (rule) {
        case PriorityRule::fifo: primary = job_ready[job]; break;
        case PriorityRule::mtwr: primary = -remaining[id]; break;
        case PriorityRule::spt: primary = op.duration; break;
      }
      std::tuple<Time, Time, int, int> key{primary, op.duration, op.job, op.pos};
      if (chosen < 0 || key < best_key) {
        chosen = id;
        best_key = key;
      }
    }

    const Operation& op = instance.op(chosen);
    schedule.set(chosen, sigma);
    job_ready[op.job] = sigma + op.duration;
    machine_free[op.machine] = sigma + op.duration;
    ++next_pos[op.job];
    --left;
  }
  return schedule;
}

}  // namespace jobshop

#include "jobshop/instance.hpp"

#include <numeric>
#include <sstream>

namespace jobshop {

Instance::Instance(int machine_count, const std::vector<std::vector<OpSpec>>& chains)
    : machine_count_(machine_count) {
  if (machine_count < 0) fail(ErrorKind::bad_config, "negative machine count");
  offsets_.reserve(chains.size() + 1);
  offsets_.push_back(0);
  for (int job = 0; job < static_cast<int>(chains.size()); ++job) {
    const auto& chain = chains[job];
    for (int pos = 0; pos < static_cast<int>(chain.size()); ++pos) {
      const OpSpec& spec = chain[pos];
      if (spec.machine < 0 || spec.machine >= machine_count) {
        std::ostringstream msg;
        msg << "machine " << spec.machine << " for job " << job << " op " << pos
            << " outside [0, " << machine_count << ")";
        fail(ErrorKind::machine_index_out_of_range, msg.str());
      }
      if (spec.duration < 1) {
        std::ostringstream msg;
        msg << "duration " << spec.duration << " for job " << job << " op " << pos;
        fail(ErrorKind::nonpositive_duration, msg.str());
      }
      ops_.push_back(Operation{job, pos, spec.machine, spec.duration});
    }
    offsets_.push_back(static_cast<int>(ops_.size()));
  }
}

bool Instance::is_strict_jsp() const {
  std::vector<char> seen(machine_count_, 0);
  for (int job = 0; job < job_count(); ++job) {
    if (chain_length(job) != machine_count_) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (const Operation& op : job_chain(job)) {
      if (seen[op.machine]) return false;
      seen[op.machine] = 1;
    }
  }
  return true;
}

Time Instance::total_work() const {
  return std::accumulate(ops_.begin(), ops_.end(), Time{0},
                         [](Time acc, const Operation& op) { return acc + op.duration; });
}

void require_strict_jsp(const Instance& instance) {
  std::vector<char> seen(instance.machine_count(), 0);
  for (int job = 0; job < instance.job_count(); ++job) {
    if (instance.chain_length(job) != instance.machine_count()) {
      std::ostringstream msg;
      msg << "job " << job << " has " << instance.chain_length(job)
          << " operations, expected " << instance.machine_count();
      fail(ErrorKind::dimension_mismatch, msg.str());
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (const Operation& op : instance.job_chain(job)) {
      if (seen[op.machine]) {
        std::ostringstream msg;
        msg << "job " << op.job << " visits machine " << op.machine << " twice";
        fail(ErrorKind::repeated_machine, msg.str());
      }
      seen[op.machine] = 1;
    }
  }
}

}  // namespace jobshop

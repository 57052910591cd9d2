#ifndef JOBSHOP_INSTANCE_HPP
#define JOBSHOP_INSTANCE_HPP

#include <span>
#include <utility>
#include <vector>

#include "jobshop/error.hpp"

namespace jobshop {

// Integer time units throughout; durations are small, horizons stay well
// inside int range even for the 100x20 benchmark sets.
using Time = int;

// Dense operation index, row-major by (job, pos).
using OpId = int;

struct Operation {
  int job = 0;
  int pos = 0;
  int machine = 0;
  Time duration = 0;
};

// Machine/duration pair used when assembling an instance.
struct OpSpec {
  int machine = 0;
  Time duration = 0;
};

// Immutable job-shop problem: jobs are ordered chains of operations, each
// operation bound to exactly one machine with a strictly positive duration.
// Safe to share across threads.
class Instance {
 public:
  Instance() = default;
  Instance(int machine_count, const std::vector<std::vector<OpSpec>>& chains);

  int job_count() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  int machine_count() const { return machine_count_; }
  int op_count() const { return static_cast<int>(ops_.size()); }
  int chain_length(int job) const { return offsets_[job + 1] - offsets_[job]; }

  OpId id(int job, int pos) const { return offsets_[job] + pos; }
  const Operation& op(OpId id) const { return ops_[id]; }
  const std::vector<Operation>& ops() const { return ops_; }

  std::span<const Operation> job_chain(int job) const {
    return {ops_.data() + offsets_[job], static_cast<std::size_t>(chain_length(job))};
  }

  // Direct job predecessor, or -1 for a job's first operation.
  OpId job_pred(OpId id) const { return ops_[id].pos == 0 ? -1 : id - 1; }
  // Direct job successor, or -1 for a job's last operation.
  OpId job_succ(OpId id) const {
    return ops_[id].pos + 1 == chain_length(ops_[id].job) ? -1 : id + 1;
  }

  bool contains(int job, int pos) const {
    return job >= 0 && job < job_count() && pos >= 0 && pos < chain_length(job);
  }

  // Classical JSP shape: every job visits every machine exactly once.
  bool is_strict_jsp() const;

  // Sum of all operation durations.
  Time total_work() const;

 private:
  int machine_count_ = 0;
  std::vector<Operation> ops_;  // flattened chains
  std::vector<int> offsets_;    // offsets_[job] .. offsets_[job + 1]
};

// Throws Error when the instance is not a strict JSP (chain length != machine
// count or a repeated machine within a job).
void require_strict_jsp(const Instance& instance);

}  // namespace jobshop

#endif

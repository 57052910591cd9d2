#include "jobshop/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "jobshop/dispatch.hpp"

namespace jobshop {

std::vector<Time> compute_est(const Instance& instance) {
  std::vector<Time> est(instance.op_count(), 0);
  for (int job = 0; job < instance.job_count(); ++job) {
    Time prefix = 0;
    for (int pos = 0; pos < instance.chain_length(job); ++pos) {
      OpId id = instance.id(job, pos);
      est[id] = prefix;
      prefix += instance.op(id).duration;
    }
  }
  return est;
}

RankTable rank_operations(const Instance& instance, RankStrategy strategy) {
  RankTable table;
  table.strategy = strategy;
  table.keys.resize(instance.op_count());
  if (strategy == RankStrategy::est) {
    std::vector<Time> est = compute_est(instance);
    for (OpId id = 0; id < instance.op_count(); ++id) {
      table.keys[id] = {est[id], instance.op(id).duration};
    }
  } else {
    std::vector<Time> remaining = remaining_work_table(instance);
    for (OpId id = 0; id < instance.op_count(); ++id) {
      table.keys[id] = {-remaining[id], instance.op(id).duration};
    }
  }
  return table;
}

MachineLoadTable machine_loads(const Instance& instance) {
  MachineLoadTable table;
  table.load.assign(instance.machine_count(), 0);
  for (const Operation& op : instance.ops()) table.load[op.machine] += op.duration;
  table.bottleneck_order.resize(instance.machine_count());
  std::iota(table.bottleneck_order.begin(), table.bottleneck_order.end(), 0);
  std::stable_sort(table.bottleneck_order.begin(), table.bottleneck_order.end(),
                   [&](int lhs, int rhs) { return table.load[lhs] > table.load[rhs]; });
  return table;
}

std::vector<std::vector<OpId>> WindowPartition::grouped() const {
  std::vector<std::vector<OpId>> out(window_count);
  for (OpId id = 0; id < static_cast<OpId>(window_of.size()); ++id) {
    out[window_of[id]].push_back(id);
  }
  return out;
}

namespace {

void check_window_count(const Instance& instance, int window_count) {
  if (window_count < 1) {
    fail(ErrorKind::bad_config, "window count must be >= 1, got " +
                                    std::to_string(window_count));
  }
  if (window_count > instance.op_count()) {
    fail(ErrorKind::bad_config,
         "window count " + std::to_string(window_count) + " exceeds operation count " +
             std::to_string(instance.op_count()) + "; empty windows are disallowed");
  }
}

int nominal_window_size(int total, int k) { return (total + k - 1) / k; }

// Block capacity for the current window: the nominal size, capped so each of
// the remaining windows still gets at least one operation.
int window_capacity(int nominal, int remaining_ops, int windows_after) {
  return std::max(1, std::min(nominal, remaining_ops - windows_after));
}

}  // namespace

WindowPartition partition_time_based(const Instance& instance, const RankTable& rank,
                                     int window_count) {
  check_window_count(instance, window_count);
  const int total = instance.op_count();

  std::vector<OpId> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](OpId lhs, OpId rhs) {
    if (rank.keys[lhs] != rank.keys[rhs]) return rank.keys[lhs] < rank.keys[rhs];
    const Operation& a = instance.op(lhs);
    const Operation& b = instance.op(rhs);
    return std::tie(a.job, a.pos) < std::tie(b.job, b.pos);
  });

  WindowPartition partition;
  partition.window_count = window_count;
  partition.nominal_size = nominal_window_size(total, window_count);
  partition.window_of.assign(total, 0);

  int window = 0;
  int taken = 0;
  int capacity = window_capacity(partition.nominal_size, total, window_count - 1);
  for (int i = 0; i < total; ++i) {
    if (taken >= capacity && window + 1 < window_count) {
      ++window;
      taken = 0;
      capacity = window_capacity(partition.nominal_size, total - i,
                                 window_count - 1 - window);
    }
    partition.window_of[order[i]] = window;
    ++taken;
  }
  return partition;
}

WindowPartition partition_machine_based(const Instance& instance, const RankTable& rank,
                                        const MachineLoadTable& loads, int window_count,
                                        BottleneckPolicy policy) {
  check_window_count(instance, window_count);
  const int total = instance.op_count();

  WindowPartition partition;
  partition.window_count = window_count;
  partition.nominal_size = nominal_window_size(total, window_count);
  partition.window_of.assign(total, -1);

  // Remaining unassigned load per machine and unassigned op count.
  std::vector<Time> remaining_load = loads.load;
  std::vector<int> machine_ops(instance.machine_count(), 0);
  for (const Operation& op : instance.ops()) ++machine_ops[op.machine];

  auto pick_machine = [&]() {
    if (policy == BottleneckPolicy::static_load) {
      for (int machine : loads.bottleneck_order) {
        if (machine_ops[machine] > 0) return machine;
      }
      return -1;
    }
    int best = -1;
    for (int machine = 0; machine < instance.machine_count(); ++machine) {
      if (machine_ops[machine] == 0) continue;
      if (best < 0 || remaining_load[machine] > remaining_load[best]) best = machine;
    }
    return best;
  };

  auto assign = [&](OpId id, int window) {
    const Operation& op = instance.op(id);
    partition.window_of[id] = window;
    remaining_load[op.machine] -= op.duration;
    --machine_ops[op.machine];
  };

  int assigned = 0;
  int window = 0;
  int taken = 0;
  int capacity = window_capacity(partition.nominal_size, total, window_count - 1);

  while (assigned < total) {
    if (window == window_count - 1) {
      // Last window absorbs everything remaining.
      for (OpId id = 0; id < total; ++id) {
        if (partition.window_of[id] < 0) {
          assign(id, window);
          ++assigned;
        }
      }
      break;
    }

    int machine = pick_machine();
    // Best-ranked unassigned op on the bottleneck machine; ties by (job, pos).
    OpId picked = -1;
    for (OpId id = 0; id < total; ++id) {
      if (partition.window_of[id] >= 0) continue;
      if (instance.op(id).machine != machine) continue;
      if (picked < 0 || rank.keys[id] < rank.keys[picked] ||
          (rank.keys[id] == rank.keys[picked] && id < picked)) {
        picked = id;
      }
    }

    // Pull unassigned job predecessors, in chain order, then the op itself.
    const Operation& op = instance.op(picked);
    int first_unassigned = op.pos;
    while (first_unassigned > 0 &&
           partition.window_of[instance.id(op.job, first_unassigned - 1)] < 0) {
      --first_unassigned;
    }
    for (int pos = first_unassigned; pos <= op.pos; ++pos) {
      assign(instance.id(op.job, pos), window);
      ++assigned;
      ++taken;
    }

    if (taken >= capacity && window + 1 < window_count) {
      ++window;
      taken = 0;
      capacity = window_capacity(partition.nominal_size, total - assigned,
                                 window_count - 1 - window);
    }
  }
  return partition;
}

PartitionReport validate_partition(const Instance& instance,
                                   const WindowPartition& partition) {
  PartitionReport report;
  if (static_cast<int>(partition.window_of.size()) != instance.op_count()) {
    for (OpId id = static_cast<OpId>(partition.window_of.size());
         id < instance.op_count(); ++id) {
      report.unassigned.push_back(id);
    }
  }
  int covered = std::min<int>(instance.op_count(),
                              static_cast<int>(partition.window_of.size()));
  for (OpId id = 0; id < covered; ++id) {
    int window = partition.window_of[id];
    if (window < 0 || window >= partition.window_count) {
      report.unassigned.push_back(id);
      continue;
    }
    OpId pred = instance.job_pred(id);
    if (pred >= 0 && partition.window_of[pred] > window) {
      report.precedence_violations.push_back({pred, id});
    }
  }
  return report;
}

}  // namespace jobshop

#ifndef JOBSHOP_DECOMPOSE_HPP
#define JOBSHOP_DECOMPOSE_HPP

#include <utility>
#include <vector>

#include "jobshop/instance.hpp"

namespace jobshop {

// Earliest possible starting times: 0 for each job's first operation, then
// the sum of same-job predecessor durations. Machine contention is ignored
// by definition.
std::vector<Time> compute_est(const Instance& instance);

enum class RankStrategy { est, mtwr };

// Lexicographic (key1, key2) ranking per operation. EST ranks by
// (EST, duration); MTWR ranks by (-remaining work, duration) so the most
// loaded operations come first. Remaining ties resolve by (job, pos).
struct RankTable {
  RankStrategy strategy = RankStrategy::est;
  std::vector<std::pair<Time, Time>> keys;  // indexed by OpId

  bool before(OpId lhs, OpId rhs) const { return keys[lhs] < keys[rhs]; }
};

RankTable rank_operations(const Instance& instance, RankStrategy strategy);

// Total processing load per machine plus machines in descending-load
// (bottleneck) order, ties by lower machine index.
struct MachineLoadTable {
  std::vector<Time> load;            // indexed by machine
  std::vector<int> bottleneck_order;
};

MachineLoadTable machine_loads(const Instance& instance);

// Assignment of every operation to one of window_count windows such that a
// predecessor's window never exceeds its successor's.
struct WindowPartition {
  int window_count = 0;
  int nominal_size = 0;             // ceil(total ops / window_count)
  std::vector<int> window_of;       // indexed by OpId

  std::vector<std::vector<OpId>> grouped() const;
};

// The bottleneck loop can either re-rank machines by remaining unassigned
// load after every pick or walk the initial load order.
enum class BottleneckPolicy { remaining_load, static_load };

// Rank-sorted operations split into consecutive blocks of nominal size. A
// block is capped so every later window keeps at least one operation.
// Throws when k exceeds the operation count.
WindowPartition partition_time_based(const Instance& instance, const RankTable& rank,
                                     int window_count);

// Windows seeded from bottleneck machines: repeatedly pick the most loaded
// machine's unassigned operation with the best rank and pull its unassigned
// job predecessors into the same window. A window closes once its size
// reaches capacity; a pulled chain may overflow it. Pass the EST ranking for
// the strategy the paper describes; an MTWR ranking gives the experimental
// variant.
WindowPartition partition_machine_based(const Instance& instance, const RankTable& rank,
                                        const MachineLoadTable& loads, int window_count,
                                        BottleneckPolicy policy = BottleneckPolicy::remaining_load);

struct PartitionReport {
  std::vector<OpId> unassigned;                        // or window out of range
  std::vector<std::pair<OpId, OpId>> precedence_violations;  // (pred, op)
  bool ok() const { return unassigned.empty() && precedence_violations.empty(); }
};

PartitionReport validate_partition(const Instance& instance, const WindowPartition& partition);

}  // namespace jobshop

#endif

#ifndef JOBSHOP_DISPATCH_HPP
#define JOBSHOP_DISPATCH_HPP

#include <string>
#include <vector>

#include "jobshop/instance.hpp"
#include "jobshop/schedule.hpp"

namespace jobshop {

// Priority rules for nondelay schedule construction. FIFO orders by the
// operation's ready time (completion of its job predecessor, 0 for first
// operations), MTWR by most total work remaining, SPT by shortest processing
// time. Ties always fall through shorter duration, then lower job index,
// then lower position, so every rule induces a total order.
enum class PriorityRule { fifo, mtwr, spt };

PriorityRule parse_rule(const std::string& text);
const char* to_string(PriorityRule rule);

// Sum of durations from op to the end of its job chain, inclusive.
// Throws unknown_operation for ids outside the instance.
Time remaining_work(const Instance& instance, OpId op);

// Per-operation remaining work, indexed by OpId.
std::vector<Time> remaining_work_table(const Instance& instance);

// Event-driven nondelay construction (Giffler-Thompson restricted to
// nondelay choices): at each decision instant the candidate with the
// earliest possible start is required, and the rule picks among the tied
// candidates. The result is always feasible.
Schedule generate_nondelay(const Instance& instance, PriorityRule rule);

}  // namespace jobshop

#endif

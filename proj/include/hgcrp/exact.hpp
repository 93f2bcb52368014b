#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hgcrp/model.hpp"

namespace hgcrp {

// Caps for the exhaustive solvers. The dense worst case grows like the Bell
// numbers (Bell(10) = 115975), so both limits abort cleanly instead of
// letting a large instance spin.
struct EnumerationBudget {
    int max_agents = 10;
    std::int64_t max_partitions = 10'000'000;
};

// Visits every partition of the agents into listed coalitions exactly once,
// in canonical (lexicographically ascending) order: the recursion always
// extends with a coalition containing the lowest unplaced agent. Return false
// from the callback to stop early. Throws BudgetExceededError when the agent
// count or the partition cap is exceeded.
void for_each_ir_partition(const Instance& inst, const EnumerationBudget& budget,
                           const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_ir_partitions(const Instance& inst,
                                               const EnumerationBudget& budget = {});

// Partition whose psi vector is lexicographically maximum; psi-ties keep the
// canonically smallest partition. The result is Pareto optimal, core stable
// and individually stable.
Partition psi_max_partition(const Instance& inst, const EnumerationBudget& budget = {});

// Welfare-maximizing partition, ties broken canonically.
Partition socially_optimal(const Instance& inst, const EnumerationBudget& budget = {});

// A partition placing every agent in a maximum-utility coalition, or nullopt.
// Runs an exact-cover search restricted to each agent's argmax coalitions.
std::optional<Partition> perfect_partition(const Instance& inst,
                                           const EnumerationBudget& budget = {});

}  // namespace hgcrp

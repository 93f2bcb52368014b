#pragma once

#include "hgcrp/model.hpp"

namespace hgcrp {

// Builds a partition by repeatedly forming a remaining listed coalition of
// maximum joint utility, breaking ties toward larger cardinality and then
// lexicographically smallest members. The output is core stable and
// individually stable, and its welfare is within a factor n of the optimum.
// Runs in O(K log K) over the K listed coalitions.
Partition greedy_solve(const Instance& inst);

}  // namespace hgcrp

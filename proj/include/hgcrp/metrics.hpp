#pragma once

#include <vector>

#include "hgcrp/checks.hpp"
#include "hgcrp/exact.hpp"

namespace hgcrp {

// Every enumerated partition with no blocking coalition. Never empty: the
// greedy construction always produces a core stable partition.
std::vector<Partition> enumerate_core_stable(const Instance& inst,
                                             const EnumerationBudget& budget = {});

// Optimal welfare divided by the worst core stable welfare, exact. Throws
// UnboundedError when the worst core stable welfare is zero (every listed
// utility is zero in that case).
Utility price_of_anarchy(const Instance& inst, const EnumerationBudget& budget = {});

// Optimal welfare divided by the best core stable welfare, exact.
Utility price_of_stability(const Instance& inst, const EnumerationBudget& budget = {});

}  // namespace hgcrp

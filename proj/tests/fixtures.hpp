#pragma once

// Shared hand-built game fixtures. Agents are 0-based here; the literature
// examples these encode number agents from 1.

#include <map>
#include <vector>

#include "hgcrp/model.hpp"

namespace fixtures {

using hgcrp::Coalition;
using hgcrp::Instance;
using hgcrp::Partition;
using hgcrp::Utility;

inline Instance make_instance(int n,
                              const std::vector<std::pair<std::vector<int>, Utility>>& entries,
                              bool allow_non_ir = false) {
    std::map<Coalition, Utility> ircl;
    for (const auto& [members, util] : entries) {
        ircl.emplace(Coalition(members), util);
    }
    return Instance(n, std::move(ircl), allow_non_ir);
}

// Two agents; staying together is exactly as good as agent 0 going alone.
// Core stable alone-partition, but Pareto dominated by the pair.
inline Instance example_one() {
    return make_instance(2, {{{0}, 1}, {{1}, 0}, {{0, 1}, 1}});
}

// Three agents; {1,2} is worth 2, everything else 1 except agent 0 alone (0).
inline Instance example_two() {
    return make_instance(3, {{{0}, 0},
                             {{1}, 1},
                             {{2}, 1},
                             {{0, 1}, 1},
                             {{0, 2}, 1},
                             {{1, 2}, 2},
                             {{0, 1, 2}, 1}});
}

// The stalker game: agent 0 wants to pair up, agent 1 wants to be alone.
// The pair is not individually rational for agent 1, so the instance keeps it
// formable through the exemption; no Nash stable partition exists.
inline Instance example_three() {
    return make_instance(2, {{{0}, 1}, {{1}, 3}, {{0, 1}, 2}}, /*allow_non_ir=*/true);
}

inline Partition make_partition(const Instance& inst,
                                const std::vector<std::vector<int>>& parts) {
    std::vector<Coalition> cs;
    for (const auto& members : parts) cs.emplace_back(members);
    return Partition(inst, std::move(cs));
}

}  // namespace fixtures

#include "hgcrp/greedy.hpp"

#include <algorithm>
#include <numeric>

namespace hgcrp {

Partition greedy_solve(const Instance& inst) {
    std::vector<int> order(inst.list_size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const Utility& ux = inst.utility_at(x);
        const Utility& uy = inst.utility_at(y);
        if (ux != uy) return uy < ux;
        const Coalition& cx = inst.coalition_at(x);
        const Coalition& cy = inst.coalition_at(y);
        if (cx.size() != cy.size()) return cx.size() > cy.size();
        return cx.members() < cy.members();
    });

    // Coalitions containing an already placed agent are skipped rather than
    // deleted; the singletons guarantee every agent is eventually covered.
    std::vector<char> placed(inst.agent_count(), 0);
    std::vector<Coalition> parts;
    int remaining = inst.agent_count();
    for (int idx : order) {
        if (remaining == 0) break;
        const Coalition& c = inst.coalition_at(idx);
        bool free = true;
        for (AgentId a : c.members()) {
            if (placed[a]) { free = false; break; }
        }
        if (!free) continue;
        for (AgentId a : c.members()) placed[a] = 1;
        remaining -= c.size();
        parts.push_back(c);
    }
    return Partition::from_disjoint_cover(inst.agent_count(), std::move(parts));
}

}  // namespace hgcrp

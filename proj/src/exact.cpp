#include "hgcrp/exact.hpp"

#include <algorithm>

namespace hgcrp {
namespace {

struct Enumerator {
    const Instance& inst;
    const EnumerationBudget& budget;
    const std::function<bool(const Partition&)>& visit;
    std::vector<char> placed;
    std::vector<Coalition> current;
    std::int64_t count = 0;

    bool dfs(int lowest_unplaced) {
        while (lowest_unplaced < inst.agent_count() && placed[lowest_unplaced]) {
            ++lowest_unplaced;
        }
        if (lowest_unplaced == inst.agent_count()) {
            if (++count > budget.max_partitions) {
                throw BudgetExceededError("partition cap " +
                                          std::to_string(budget.max_partitions) + " exceeded");
            }
            return visit(Partition::from_disjoint_cover(inst.agent_count(), current));
        }
        for (int idx : inst.coalitions_containing(lowest_unplaced)) {
            const Coalition& c = inst.coalition_at(idx);
            bool free = true;
            for (AgentId a : c.members()) {
                if (placed[a]) { free = false; break; }
            }
            if (!free) continue;
            for (AgentId a : c.members()) placed[a] = 1;
            current.push_back(c);
            bool keep_going = dfs(lowest_unplaced + 1);
            current.pop_back();
            for (AgentId a : c.members()) placed[a] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_ir_partition(const Instance& inst, const EnumerationBudget& budget,
                           const std::function<bool(const Partition&)>& visit) {
    if (inst.agent_count() > budget.max_agents) {
        throw BudgetExceededError("instance has " + std::to_string(inst.agent_count()) +
                                  " agents, budget allows " + std::to_string(budget.max_agents));
    }
    Enumerator e{inst, budget, visit, std::vector<char>(inst.agent_count(), 0), {}, 0};
    e.dfs(0);
}

std::vector<Partition> enumerate_ir_partitions(const Instance& inst,
                                               const EnumerationBudget& budget) {
    std::vector<Partition> out;
    for_each_ir_partition(inst, budget, [&](const Partition& pi) {
        out.push_back(pi);
        return true;
    });
    return out;
}

Partition psi_max_partition(const Instance& inst, const EnumerationBudget& budget) {
    std::optional<Partition> best;
    std::optional<PsiVector> best_psi;
    for_each_ir_partition(inst, budget, [&](const Partition& pi) {
        PsiVector v = psi(inst, pi);
        // First hit in canonical order wins ties, so only strict improvements replace.
        if (!best || psi_compare(v, *best_psi) == Ordering::greater) {
            best = pi;
            best_psi = std::move(v);
        }
        return true;
    });
    return *best;  // all-singletons always exists
}

Partition socially_optimal(const Instance& inst, const EnumerationBudget& budget) {
    std::optional<Partition> best;
    Utility best_welfare = 0;
    for_each_ir_partition(inst, budget, [&](const Partition& pi) {
        Utility w = welfare(inst, pi);
        if (!best || best_welfare < w) {
            best = pi;
            best_welfare = w;
        }
        return true;
    });
    return *best;
}

std::optional<Partition> perfect_partition(const Instance& inst,
                                           const EnumerationBudget& budget) {
    if (inst.agent_count() > budget.max_agents) {
        throw BudgetExceededError("instance has " + std::to_string(inst.agent_count()) +
                                  " agents, budget allows " + std::to_string(budget.max_agents));
    }
    const int n = inst.agent_count();
    // Perfectness forces every agent into an argmax coalition, so restrict the
    // cover search to those up front.
    std::vector<Utility> best(n);
    for (AgentId a = 0; a < n; ++a) {
        best[a] = inst.singleton_utility(a);
        for (int idx : inst.coalitions_containing(a)) {
            best[a] = std::max(best[a], inst.utility_at(idx));
        }
    }
    std::vector<std::vector<int>> argmax_by_agent(n);
    for (AgentId a = 0; a < n; ++a) {
        for (int idx : inst.coalitions_containing(a)) {
            if (inst.utility_at(idx) != best[a]) continue;
            const Coalition& c = inst.coalition_at(idx);
            bool ok = true;
            for (AgentId m : c.members()) {
                if (inst.utility_at(idx) != best[m]) { ok = false; break; }
            }
            if (ok) argmax_by_agent[a].push_back(idx);
        }
    }

    std::vector<char> placed(n, 0);
    std::vector<Coalition> current;
    std::optional<Partition> found;
    auto dfs = [&](auto&& self, int lowest) -> bool {
        while (lowest < n && placed[lowest]) ++lowest;
        if (lowest == n) {
            found = Partition::from_disjoint_cover(n, current);
            return true;
        }
        for (int idx : argmax_by_agent[lowest]) {
            const Coalition& c = inst.coalition_at(idx);
            bool free = true;
            for (AgentId a : c.members()) {
                if (placed[a]) { free = false; break; }
            }
            if (!free) continue;
            for (AgentId a : c.members()) placed[a] = 1;
            current.push_back(c);
            bool done = self(self, lowest + 1);
            current.pop_back();
            for (AgentId a : c.members()) placed[a] = 0;
            if (done) return true;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

}  // namespace hgcrp

#include "hgcrp/checks.hpp"

#include <algorithm>

namespace hgcrp {
namespace {

std::vector<Utility> current_utilities(const Instance& inst, const Partition& pi) {
    std::vector<Utility> u(pi.agent_count());
    for (const Coalition& c : pi.coalitions()) {
        const Utility& v = inst.utility(c);
        for (AgentId a : c.members()) u[a] = v;
    }
    return u;
}

Coalition join(const Coalition& target, AgentId agent) {
    std::vector<AgentId> members = target.members();
    members.push_back(agent);
    return Coalition(std::move(members));
}

// Shared scan for the two unilateral-deviation notions. A move is feasible in
// the listed solution space only if the coalition it creates and the coalition
// it leaves behind are both listed.
std::optional<AgentMove> find_unilateral_deviation(const Instance& inst, const Partition& pi,
                                                   bool protect_target_members) {
    std::vector<Utility> current = current_utilities(inst, pi);
    for (AgentId i = 0; i < pi.agent_count(); ++i) {
        const Coalition& home = pi.coalition_of(i);
        if (home.size() > 1) {
            std::vector<AgentId> rest = home.difference(Coalition::singleton(i));
            if (!inst.is_listed(Coalition(std::move(rest)))) continue;  // cannot leave
        }
        // Empty target first: the agent goes alone.
        if (inst.singleton_utility(i) > current[i]) {
            return AgentMove{i, std::nullopt};
        }
        for (const Coalition& target : pi.coalitions()) {
            if (target == home) continue;
            Coalition joined = join(target, i);
            auto idx = inst.index_of(joined);
            if (!idx) continue;
            const Utility& joint = inst.utility_at(*idx);
            if (!(joint > current[i])) continue;
            if (protect_target_members && joint < inst.utility(target)) continue;
            return AgentMove{i, target};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Coalition> find_blocking_coalition(const Instance& inst, const Partition& pi) {
    std::vector<Utility> current = current_utilities(inst, pi);
    for (int idx : inst.size_lex_order()) {
        const Coalition& s = inst.coalition_at(idx);
        const Utility& joint = inst.utility_at(idx);
        bool blocks = true;
        for (AgentId a : s.members()) {
            if (!(joint > current[a])) { blocks = false; break; }
        }
        if (blocks) return s;
    }
    return std::nullopt;
}

std::optional<AgentMove> find_is_deviation(const Instance& inst, const Partition& pi) {
    return find_unilateral_deviation(inst, pi, /*protect_target_members=*/true);
}

std::optional<AgentMove> find_nash_deviation(const Instance& inst, const Partition& pi) {
    return find_unilateral_deviation(inst, pi, /*protect_target_members=*/false);
}

bool is_perfect(const Instance& inst, const Partition& pi) {
    for (AgentId a = 0; a < pi.agent_count(); ++a) {
        Utility best = inst.singleton_utility(a);
        for (int idx : inst.coalitions_containing(a)) {
            best = std::max(best, inst.utility_at(idx));
        }
        if (utility_of(inst, pi, a) < best) return false;
    }
    return true;
}

bool pareto_dominates(const Instance& inst, const Partition& a, const Partition& b) {
    std::vector<Utility> ua = current_utilities(inst, a);
    std::vector<Utility> ub = current_utilities(inst, b);
    bool strict = false;
    for (AgentId i = 0; i < a.agent_count(); ++i) {
        if (ua[i] < ub[i]) return false;
        if (ub[i] < ua[i]) strict = true;
    }
    return strict;
}

std::optional<Partition> find_pareto_dominator(const Instance& inst, const Partition& pi,
                                               const EnumerationBudget& budget) {
    std::optional<Partition> found;
    for_each_ir_partition(inst, budget, [&](const Partition& candidate) {
        if (pareto_dominates(inst, candidate, pi)) {
            found = candidate;
            return false;
        }
        return true;
    });
    return found;
}

Partition apply_move(const Instance& inst, const Partition& pi, const AgentMove& move) {
    const Coalition& home = pi.coalition_of(move.agent);
    std::vector<Coalition> parts;
    for (const Coalition& c : pi.coalitions()) {
        if (c == home) continue;
        if (move.target && c == *move.target) continue;
        parts.push_back(c);
    }
    if (home.size() > 1) {
        parts.emplace_back(home.difference(Coalition::singleton(move.agent)));
    }
    if (move.target) {
        parts.push_back(join(*move.target, move.agent));
    } else {
        parts.push_back(Coalition::singleton(move.agent));
    }
    return Partition(inst, std::move(parts));
}

bool deviation_violates(const Instance& inst, const Partition& pi, const Deviation& dev) {
    switch (dev.kind) {
        case DeviationKind::BlockingCoalition: {
            const auto& s = std::get<Coalition>(dev.witness);
            auto idx = inst.index_of(s);
            if (!idx) return false;
            for (AgentId a : s.members()) {
                if (!(inst.utility_at(*idx) > utility_of(inst, pi, a))) return false;
            }
            return true;
        }
        case DeviationKind::IndividualMove:
        case DeviationKind::NashMove: {
            const auto& mv = std::get<AgentMove>(dev.witness);
            const Coalition& home = pi.coalition_of(mv.agent);
            if (mv.target && (!pi.contains_coalition(*mv.target) || *mv.target == home)) {
                return false;
            }
            if (home.size() > 1 &&
                !inst.is_listed(Coalition(home.difference(Coalition::singleton(mv.agent))))) {
                return false;
            }
            Coalition joined = mv.target ? join(*mv.target, mv.agent)
                                         : Coalition::singleton(mv.agent);
            auto idx = inst.index_of(joined);
            if (!idx) return false;
            if (!(inst.utility_at(*idx) > utility_of(inst, pi, mv.agent))) return false;
            if (dev.kind == DeviationKind::IndividualMove && mv.target &&
                inst.utility_at(*idx) < inst.utility(*mv.target)) {
                return false;
            }
            return true;
        }
        case DeviationKind::ParetoDominator:
            return pareto_dominates(inst, std::get<Partition>(dev.witness), pi);
    }
    return false;
}

}  // namespace hgcrp

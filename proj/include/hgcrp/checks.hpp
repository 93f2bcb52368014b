#pragma once

#include <optional>
#include <variant>

#include "hgcrp/exact.hpp"
#include "hgcrp/model.hpp"

namespace hgcrp {

// A single-agent move: the agent leaves its current coalition and joins
// `target` (a coalition of the partition), or goes alone when target is empty.
struct AgentMove {
    AgentId agent;
    std::optional<Coalition> target;

    friend bool operator==(const AgentMove& a, const AgentMove& b) = default;
};

enum class DeviationKind { BlockingCoalition, IndividualMove, NashMove, ParetoDominator };

// A checkable counterexample to one of the solution concepts.
struct Deviation {
    DeviationKind kind;
    std::variant<Coalition, AgentMove, Partition> witness;
};

// Listed coalition S with U(S) strictly above every member's current utility,
// smallest by (size, lexicographic members); nullopt iff pi is core stable.
// Searching listed coalitions suffices: an unlisted blocking coalition would
// imply some member's singleton blocks as well.
std::optional<Coalition> find_blocking_coalition(const Instance& inst, const Partition& pi);

// Individual-stability deviation: agent i and target T in pi (or empty) with
// U(T+{i}) > U(pi(i)) and U(T+{i}) >= U(T), where T+{i} and the shrunken
// pi(i)-{i} must both be listed to be formable. nullopt iff pi is
// individually stable over the listed solution space. Deterministic order:
// lowest agent first, empty target before the partition's coalitions in
// canonical order.
std::optional<AgentMove> find_is_deviation(const Instance& inst, const Partition& pi);

// Same move space without the "members of T not worse off" condition;
// nullopt iff pi is Nash stable.
std::optional<AgentMove> find_nash_deviation(const Instance& inst, const Partition& pi);

// True iff every agent sits in a maximum-utility listed coalition.
bool is_perfect(const Instance& inst, const Partition& pi);

// True iff `a` weakly improves every agent over `b` and strictly improves one.
bool pareto_dominates(const Instance& inst, const Partition& a, const Partition& b);

// First partition in canonical enumeration order that Pareto dominates pi,
// or nullopt iff pi is Pareto optimal over the listed solution space.
std::optional<Partition> find_pareto_dominator(const Instance& inst, const Partition& pi,
                                               const EnumerationBudget& budget = {});

// The partition after an AgentMove is carried out. Throws ValidationError if
// a coalition the move creates is not listed.
Partition apply_move(const Instance& inst, const Partition& pi, const AgentMove& move);

// Re-evaluates a witness against the definition it claims to violate.
bool deviation_violates(const Instance& inst, const Partition& pi, const Deviation& dev);

}  // namespace hgcrp

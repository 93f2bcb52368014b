#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgcrp/errors.hpp"
#include "hgcrp/rational.hpp"

namespace hgcrp {

// Agents are dense zero-based indices into [0, n).
using AgentId = int;

// Every member of a coalition receives the coalition's joint utility.
using Utility = Rational;

// Non-empty set of agents, stored in ascending order. Equality is set
// equality; the default ordering is lexicographic on the member list.
class Coalition {
public:
    explicit Coalition(std::vector<AgentId> members);
    static Coalition singleton(AgentId agent) { return Coalition({agent}); }

    const std::vector<AgentId>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    AgentId min_member() const { return members_.front(); }
    bool contains(AgentId agent) const;
    bool intersects(const Coalition& other) const;
    // Set difference; the result may be empty.
    std::vector<AgentId> difference(const Coalition& other) const;
    // Members joined with commas: "0,2,5".
    std::string str() const;

    friend bool operator==(const Coalition& a, const Coalition& b) = default;
    friend std::strong_ordering operator<=>(const Coalition& a, const Coalition& b) {
        return a.members_ <=> b.members_;
    }

private:
    std::vector<AgentId> members_;
};

// Witness-selection and file order: smaller size first, then lexicographic.
bool size_lex_less(const Coalition& a, const Coalition& b);

// A game in individually-rational-coalition-list form: the agent count plus a
// finite map from listed coalitions to their joint utility. Construction
// validates:
//   - every singleton {i}, i in [0, n), is listed,
//   - members of every key are inside [0, n),
//   - utilities are non-negative,
//   - every non-singleton key has utility >= each member's singleton utility,
//     unless the instance carries the allow-non-ir exemption.
//
// The exemption exists for constructions that deliberately keep a non-IR
// coalition formable (the price-of-stability family lists the grand
// coalition below agent 0's singleton value); such files record the
// exemption in their header.
class Instance {
public:
    Instance(int agent_count, std::map<Coalition, Utility> ircl, bool allow_non_ir = false);

    int agent_count() const { return n_; }
    bool allow_non_ir() const { return allow_non_ir_; }

    // Listed coalitions in lexicographic member order.
    int list_size() const { return static_cast<int>(coalitions_.size()); }
    const Coalition& coalition_at(int idx) const { return coalitions_[idx]; }
    const Utility& utility_at(int idx) const { return utilities_[idx]; }

    std::optional<int> index_of(const Coalition& c) const;
    bool is_listed(const Coalition& c) const { return index_of(c).has_value(); }
    const Utility& utility(const Coalition& c) const;  // throws if unlisted
    const Utility& singleton_utility(AgentId agent) const;

    // Indices of listed coalitions containing the agent, ascending.
    const std::vector<int>& coalitions_containing(AgentId agent) const;
    // All listed coalition indices ordered by (size, lexicographic members).
    const std::vector<int>& size_lex_order() const { return size_lex_order_; }

    int max_coalition_size() const { return max_size_; }

    friend bool operator==(const Instance& a, const Instance& b);

private:
    int n_ = 0;
    bool allow_non_ir_ = false;
    int max_size_ = 0;
    std::vector<Coalition> coalitions_;
    std::vector<Utility> utilities_;
    std::vector<int> singleton_index_;
    std::vector<std::vector<int>> by_agent_;
    std::vector<int> size_lex_order_;
};

// Pairwise-disjoint coalitions covering [0, n) exactly, each listed in the
// instance's IRCL. Coalitions are kept sorted by smallest member; the
// ordering on partitions is lexicographic over that canonical sequence.
class Partition {
public:
    // Full validation: disjoint cover of the instance's agents, all listed.
    Partition(const Instance& inst, std::vector<Coalition> parts);

    // Cover/disjointness are still checked; listedness is the caller's
    // responsibility (used by solvers that pick coalitions out of the IRCL).
    static Partition from_disjoint_cover(int agent_count, std::vector<Coalition> parts);

    int agent_count() const { return n_; }
    int size() const { return static_cast<int>(coalitions_.size()); }
    const std::vector<Coalition>& coalitions() const { return coalitions_; }
    const Coalition& coalition_of(AgentId agent) const;
    int coalition_index_of(AgentId agent) const;
    bool contains_coalition(const Coalition& c) const;
    // "{{0,1},{2}}"
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.coalitions_ == b.coalitions_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.coalitions_ <=> b.coalitions_;
    }

private:
    Partition() = default;
    void build_index();

    int n_ = 0;
    std::vector<Coalition> coalitions_;
    std::vector<int> index_of_agent_;
};

// The n agent utilities under a partition, sorted non-increasing. This is the
// potential maximized by the exact solver; it is compared lexicographically.
class PsiVector {
public:
    explicit PsiVector(std::vector<Utility> values);  // sorts non-increasing

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<Utility>& values() const { return values_; }
    std::string str() const;  // "2, 2, 0"

    friend bool operator==(const PsiVector& a, const PsiVector& b) = default;

private:
    std::vector<Utility> values_;
};

enum class Ordering { less, equal, greater };

// Lexicographic comparison with exact element comparison. Lengths must match.
Ordering psi_compare(const PsiVector& a, const PsiVector& b);

// U(pi(i)).
Utility utility_of(const Instance& inst, const Partition& pi, AgentId agent);

// All n agent utilities sorted non-increasing.
PsiVector psi(const Instance& inst, const Partition& pi);

// The partition arising when the agents of s abandon pi to form s: residual
// coalitions pi(j) \ s shrink, empty residuals vanish. Throws ValidationError
// when a non-empty residual is not listed (its utility would be undefined).
Partition induced_partition(const Instance& inst, const Partition& pi, const Coalition& s);

// Sum over coalitions of |C| * U(C), exact.
Utility welfare(const Instance& inst, const Partition& pi);

}  // namespace hgcrp

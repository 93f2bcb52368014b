#include "hgcrp/model.hpp"

#include <algorithm>

namespace hgcrp {

Coalition::Coalition(std::vector<AgentId> members) : members_(std::move(members)) {
    if (members_.empty()) throw ValidationError("coalition must be non-empty");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw ValidationError("coalition has duplicate members");
    }
    if (members_.front() < 0) throw ValidationError("negative agent index");
}

bool Coalition::contains(AgentId agent) const {
    return std::binary_search(members_.begin(), members_.end(), agent);
}

bool Coalition::intersects(const Coalition& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        (*a < *b) ? ++a : ++b;
    }
    return false;
}

std::vector<AgentId> Coalition::difference(const Coalition& other) const {
    std::vector<AgentId> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return out;
}

std::string Coalition::str() const {
    std::string s;
    for (AgentId a : members_) {
        if (!s.empty()) s += ',';
        s += std::to_string(a);
    }
    return s;
}

bool size_lex_less(const Coalition& a, const Coalition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

Instance::Instance(int agent_count, std::map<Coalition, Utility> ircl, bool allow_non_ir)
    : n_(agent_count), allow_non_ir_(allow_non_ir) {
    if (n_ < 1) throw ValidationError("instance needs at least one agent");
    coalitions_.reserve(ircl.size());
    utilities_.reserve(ircl.size());
    for (auto& [coal, util] : ircl) {
        if (coal.members().back() >= n_) {
            throw ValidationError("agent index " + std::to_string(coal.members().back()) +
                                  " out of range in coalition {" + coal.str() + "}");
        }
        if (util.is_negative()) {
            throw ValidationError("negative utility for coalition {" + coal.str() + "}");
        }
        coalitions_.push_back(coal);
        utilities_.push_back(util);
        max_size_ = std::max(max_size_, coal.size());
    }
    // std::map iteration is already the lexicographic coalition order.
    singleton_index_.assign(n_, -1);
    by_agent_.assign(n_, {});
    for (int idx = 0; idx < list_size(); ++idx) {
        const Coalition& c = coalitions_[idx];
        if (c.size() == 1) singleton_index_[c.min_member()] = idx;
        for (AgentId a : c.members()) by_agent_[a].push_back(idx);
    }
    for (AgentId a = 0; a < n_; ++a) {
        if (singleton_index_[a] < 0) {
            throw ValidationError("missing singleton coalition {" + std::to_string(a) + "}");
        }
    }
    if (!allow_non_ir_) {
        for (int idx = 0; idx < list_size(); ++idx) {
            const Coalition& c = coalitions_[idx];
            if (c.size() == 1) continue;
            for (AgentId a : c.members()) {
                if (utilities_[idx] < singleton_utility(a)) {
                    throw ValidationError("coalition {" + c.str() +
                                          "} is not individually rational for agent " +
                                          std::to_string(a));
                }
            }
        }
    }
    size_lex_order_.resize(list_size());
    for (int i = 0; i < list_size(); ++i) size_lex_order_[i] = i;
    std::sort(size_lex_order_.begin(), size_lex_order_.end(), [&](int x, int y) {
        return size_lex_less(coalitions_[x], coalitions_[y]);
    });
}

std::optional<int> Instance::index_of(const Coalition& c) const {
    auto it = std::lower_bound(coalitions_.begin(), coalitions_.end(), c);
    if (it == coalitions_.end() || *it != c) return std::nullopt;
    return static_cast<int>(it - coalitions_.begin());
}

const Utility& Instance::utility(const Coalition& c) const {
    auto idx = index_of(c);
    if (!idx) throw ValidationError("coalition {" + c.str() + "} is not listed");
    return utilities_[*idx];
}

const Utility& Instance::singleton_utility(AgentId agent) const {
    if (agent < 0 || agent >= n_) {
        throw ValidationError("agent index " + std::to_string(agent) + " out of range");
    }
    return utilities_[singleton_index_[agent]];
}

const std::vector<int>& Instance::coalitions_containing(AgentId agent) const {
    if (agent < 0 || agent >= n_) {
        throw ValidationError("agent index " + std::to_string(agent) + " out of range");
    }
    return by_agent_[agent];
}

bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.allow_non_ir_ == b.allow_non_ir_ &&
           a.coalitions_ == b.coalitions_ && a.utilities_ == b.utilities_;
}

Partition::Partition(const Instance& inst, std::vector<Coalition> parts) {
    n_ = inst.agent_count();
    coalitions_ = std::move(parts);
    for (const Coalition& c : coalitions_) {
        if (!inst.is_listed(c)) {
            throw ValidationError("partition coalition {" + c.str() + "} is not listed");
        }
    }
    build_index();
}

Partition Partition::from_disjoint_cover(int agent_count, std::vector<Coalition> parts) {
    Partition p;
    p.n_ = agent_count;
    p.coalitions_ = std::move(parts);
    p.build_index();
    return p;
}

void Partition::build_index() {
    std::sort(coalitions_.begin(), coalitions_.end(),
              [](const Coalition& a, const Coalition& b) { return a.min_member() < b.min_member(); });
    index_of_agent_.assign(n_, -1);
    for (int idx = 0; idx < size(); ++idx) {
        for (AgentId a : coalitions_[idx].members()) {
            if (a >= n_) {
                throw ValidationError("agent index " + std::to_string(a) +
                                      " out of range in partition");
            }
            if (index_of_agent_[a] != -1) {
                throw ValidationError("agent " + std::to_string(a) +
                                      " appears in two coalitions of a partition");
            }
            index_of_agent_[a] = idx;
        }
    }
    for (AgentId a = 0; a < n_; ++a) {
        if (index_of_agent_[a] < 0) {
            throw ValidationError("agent " + std::to_string(a) + " is not covered by partition");
        }
    }
}

const Coalition& Partition::coalition_of(AgentId agent) const {
    return coalitions_[coalition_index_of(agent)];
}

int Partition::coalition_index_of(AgentId agent) const {
    if (agent < 0 || agent >= n_) {
        throw ValidationError("agent index " + std::to_string(agent) + " out of range");
    }
    return index_of_agent_[agent];
}

bool Partition::contains_coalition(const Coalition& c) const {
    return coalition_of(c.min_member()) == c;
}

std::string Partition::str() const {
    std::string s = "{";
    for (const Coalition& c : coalitions_) {
        if (s.size() > 1) s += ',';
        s += '{' + c.str() + '}';
    }
    return s + '}';
}

PsiVector::PsiVector(std::vector<Utility> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(),
              [](const Utility& a, const Utility& b) { return b < a; });
}

std::string PsiVector::str() const {
    std::string s;
    for (const Utility& v : values_) {
        if (!s.empty()) s += ", ";
        s += v.str();
    }
    return s;
}

Ordering psi_compare(const PsiVector& a, const PsiVector& b) {
    if (a.size() != b.size()) {
        throw ValidationError("psi vectors have different lengths");
    }
    for (int i = 0; i < a.size(); ++i) {
        if (a.values()[i] < b.values()[i]) return Ordering::less;
        if (b.values()[i] < a.values()[i]) return Ordering::greater;
    }
    return Ordering::equal;
}

Utility utility_of(const Instance& inst, const Partition& pi, AgentId agent) {
    return inst.utility(pi.coalition_of(agent));
}

PsiVector psi(const Instance& inst, const Partition& pi) {
    std::vector<Utility> values;
    values.reserve(pi.agent_count());
    for (const Coalition& c : pi.coalitions()) {
        const Utility& u = inst.utility(c);
        for (int k = 0; k < c.size(); ++k) values.push_back(u);
    }
    return PsiVector(std::move(values));
}

Partition induced_partition(const Instance& inst, const Partition& pi, const Coalition& s) {
    if (!inst.is_listed(s)) {
        throw ValidationError("deviating coalition {" + s.str() + "} is not listed");
    }
    std::vector<Coalition> parts;
    parts.push_back(s);
    for (const Coalition& c : pi.coalitions()) {
        if (!c.intersects(s)) {
            parts.push_back(c);
            continue;
        }
        std::vector<AgentId> rest = c.difference(s);
        if (rest.empty()) continue;
        Coalition residual(std::move(rest));
        if (!inst.is_listed(residual)) {
            throw ValidationError("residual coalition {" + residual.str() + "} is not listed");
        }
        parts.push_back(std::move(residual));
    }
    return Partition::from_disjoint_cover(inst.agent_count(), std::move(parts));
}

Utility welfare(const Instance& inst, const Partition& pi) {
    Utility total = 0;
    for (const Coalition& c : pi.coalitions()) {
        total += inst.utility(c) * Utility(c.size());
    }
    return total;
}

}  // namespace hgcrp

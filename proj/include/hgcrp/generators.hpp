#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgcrp/model.hpp"

namespace hgcrp {

// An exact-cover question: universe [0, n) and a family of subsets.
struct SetCoverSpec {
    int universe_size = 0;
    std::vector<std::vector<int>> subsets;
};

// Simple undirected graph (no loops, no duplicate pairs).
struct GraphSpec {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

void validate_spec(const SetCoverSpec& spec);
void validate_spec(const GraphSpec& spec);

// Line-based auxiliary formats ('#' comments and blank lines allowed):
//
//   universe <n>          vertices <n>
//   subset: 0,1,2         edge: 0,1
SetCoverSpec parse_set_cover(std::istream& in);
SetCoverSpec parse_set_cover(const std::string& text);
SetCoverSpec load_set_cover(const std::string& path);
GraphSpec parse_graph(std::istream& in);
GraphSpec parse_graph(const std::string& text);
GraphSpec load_graph(const std::string& path);

// Encodes an exact-cover question as a game: one agent per universe element,
// utility 2 for every family subset, 1 for plain singletons. A perfect
// partition exists iff the family has an exact cover. When a family subset is
// itself a singleton its value 2 replaces the default 1.
Instance from_exact_cover(const SetCoverSpec& spec);

// Encodes a maximum-independent-set question: one agent per edge of the
// graph; each vertex v of positive degree becomes the coalition of its
// incident edge-agents with utility 1/deg(v); plain singletons get
// eps (default 1/|E|^2, and any 0 < eps <= 1/|E|^2 is accepted). The optimal
// welfare is |I*| + eps*|J*| for a maximum independent set I*.
Instance from_independent_set(const GraphSpec& spec,
                              std::optional<Utility> eps = std::nullopt);

// C_v per vertex: the coalition of incident edge-agents (nullopt if
// isolated). Index order matches spec vertex ids; used to read independent
// sets back out of partitions of the reduced instance.
std::vector<std::optional<Coalition>> vertex_coalitions(const GraphSpec& spec);

// The tight price-of-stability family: grand coalition worth 1, agent 0 alone
// worth 1 + eps, everyone else alone worth 0. The grand coalition is not
// individually rational for agent 0, so the instance carries the allow-non-ir
// exemption to keep it formable; the unique core stable outcome is the
// all-singleton partition and both welfare ratios equal n/(1+eps).
Instance pos_family(int n, const Utility& eps);

// Deterministic random instance: all singletons with utilities p/q, q <=
// max_den, p <= 4q; every coalition of size 2..max_size is listed with the
// given probability, its utility drawn from [m, m+4] in steps of 1/q where m
// is the members' largest singleton utility (so the list is individually
// rational by construction).
Instance random_instance(int n, int max_size, const Utility& density, int max_den,
                         std::uint64_t seed);

}  // namespace hgcrp

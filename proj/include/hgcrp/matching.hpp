#pragma once

#include <cstdint>
#include <vector>

#include "hgcrp/model.hpp"

namespace hgcrp {

struct WeightedEdge {
    int u;
    int v;
    Utility weight;
};

// Simple undirected graph with non-negative rational edge weights.
struct WeightedGraph {
    int vertex_count = 0;
    std::vector<WeightedEdge> edges;
};

// Throws ValidationError on loops, duplicate pairs, out-of-range endpoints or
// negative weights.
void validate_graph(const WeightedGraph& g);

// A set of pairwise non-adjacent edges, stored as ascending edge indices.
struct Matching {
    std::vector<int> edge_indices;

    Utility total_weight(const WeightedGraph& g) const;
    bool saturates(const WeightedGraph& g, int vertex) const;
};

// Exact maximum-weight matching on a general graph (Edmonds blossom family,
// primal-dual, O(V^3)-class). Rational weights are scaled by their common
// denominator to integers first; the scaling is exact and overflow-checked.
// Among maximum-weight matchings the result is canonical: edges are admitted
// greedily in ascending index order whenever doing so preserves the optimum,
// which yields the lexicographically smallest such matching (and absorbs
// compatible zero-weight edges). The optimum is certified internally against
// the dual solution; a certification failure throws std::logic_error.
Matching max_weight_matching(const WeightedGraph& g);

// The graph of the size-<=2 welfare reduction: vertices i (pair side) and
// n + i (solo side) per agent; edge (i, n+i) of weight U({i}); edge (i, j) of
// weight 2 U({i,j}) per listed pair. Edge order: the n singleton edges first,
// then pairs in lexicographic order.
WeightedGraph match2_graph(const Instance& inst);

// Welfare-maximizing partition for instances whose coalitions have at most 2
// members, via one maximum-weight matching on match2_graph. Throws
// ValidationError when a larger coalition is listed.
Partition match2_opt(const Instance& inst);

// One round of the layered construction: the coalitions formed among the
// current maximum-utility layer, plus the matching value that certifies the
// count of agents placed at that utility.
struct PcisLayer {
    Utility beta;
    std::vector<Coalition> formed;
    std::int64_t matching_value = 0;
};

std::vector<PcisLayer> match2_pcis_layers(const Instance& inst);

// Pareto optimal, core stable and individually stable partition for
// size-<=2 instances: repeatedly match the maximum-utility layer (weight 1
// per singleton edge, 2 per pair edge), form its coalitions, drop their
// agents, and recurse on the rest.
Partition match2_pcis(const Instance& inst);

}  // namespace hgcrp

#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// solver paths: matchings by exhaustive recursion, set partitions by
// restricted growth strings, exact covers and independent sets by subset
// search. They gate the production algorithms in the unit and acceptance
// suites.

#include <functional>
#include <vector>

#include "hgcrp/generators.hpp"
#include "hgcrp/matching.hpp"
#include "hgcrp/model.hpp"

namespace oracles {

// Maximum total weight over all matchings, by branching on the lowest
// unsaturated vertex (leave it exposed, or match it to any free neighbor).
inline hgcrp::Utility brute_matching_weight(const hgcrp::WeightedGraph& g) {
    std::vector<std::vector<int>> incident(g.vertex_count);
    for (size_t k = 0; k < g.edges.size(); ++k) {
        incident[g.edges[k].u].push_back(static_cast<int>(k));
        incident[g.edges[k].v].push_back(static_cast<int>(k));
    }
    std::vector<char> used(g.vertex_count, 0);
    std::function<hgcrp::Utility(int)> rec = [&](int v) -> hgcrp::Utility {
        while (v < g.vertex_count && used[v]) ++v;
        if (v >= g.vertex_count) return 0;
        used[v] = 1;
        hgcrp::Utility best = rec(v + 1);  // v stays exposed
        for (int k : incident[v]) {
            int w = g.edges[k].u == v ? g.edges[k].v : g.edges[k].u;
            if (used[w]) continue;
            used[w] = 1;
            hgcrp::Utility cand = g.edges[k].weight + rec(v + 1);
            if (best < cand) best = cand;
            used[w] = 0;
        }
        used[v] = 0;
        return best;
    };
    return rec(0);
}

// All set partitions of [0, n), unrestricted, via restricted growth strings.
inline void for_each_set_partition(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<int> block_of(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used_blocks) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(used_blocks);
            for (int a = 0; a < n; ++a) blocks[block_of[a]].push_back(a);
            fn(blocks);
            return;
        }
        for (int b = 0; b <= used_blocks; ++b) {
            block_of[i] = b;
            rec(i + 1, std::max(used_blocks, b + 1));
        }
    };
    rec(0, 0);
}

// Does the family admit an exact cover of the universe?
inline bool exact_cover_exists(const hgcrp::SetCoverSpec& spec) {
    std::vector<unsigned> masks;
    for (const auto& s : spec.subsets) {
        unsigned m = 0;
        for (int e : s) m |= 1u << e;
        masks.push_back(m);
    }
    unsigned full = (spec.universe_size == 32) ? ~0u : (1u << spec.universe_size) - 1;
    std::function<bool(unsigned)> rec = [&](unsigned covered) -> bool {
        if (covered == full) return true;
        int lowest = 0;
        while (covered & (1u << lowest)) ++lowest;
        for (unsigned m : masks) {
            if ((m & (1u << lowest)) && !(m & covered) && rec(covered | m)) return true;
        }
        return false;
    };
    return rec(0);
}

// Size of a maximum independent set, by subset enumeration.
inline int max_independent_set_size(const hgcrp::GraphSpec& g) {
    int best = 0;
    for (unsigned s = 0; s < (1u << g.vertex_count); ++s) {
        bool independent = true;
        for (auto [u, v] : g.edges) {
            if ((s & (1u << u)) && (s & (1u << v))) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Re-indexes the graph onto its non-isolated vertices. Isolated vertices
// yield no coalition in the independent-set reduction, so tests comparing
// against a maximum independent set work on the compacted graph.
inline hgcrp::GraphSpec drop_isolated(const hgcrp::GraphSpec& g) {
    std::vector<int> new_id(g.vertex_count, -1);
    hgcrp::GraphSpec out;
    for (auto [u, v] : g.edges) {
        if (new_id[u] < 0) new_id[u] = out.vertex_count++;
        if (new_id[v] < 0) new_id[v] = out.vertex_count++;
        out.edges.emplace_back(new_id[u], new_id[v]);
    }
    return out;
}

inline bool is_independent_set(const hgcrp::GraphSpec& g, const std::vector<int>& vertices) {
    for (size_t a = 0; a < vertices.size(); ++a) {
        for (size_t b = a + 1; b < vertices.size(); ++b) {
            for (auto [u, v] : g.edges) {
                int x = vertices[a], y = vertices[b];
                if ((u == x && v == y) || (u == y && v == x)) return false;
            }
        }
    }
    return true;
}

}  // namespace oracles

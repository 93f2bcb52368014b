#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hgcrp/checks.hpp"
#include "hgcrp/exact.hpp"
#include "hgcrp/generators.hpp"
#include "hgcrp/matching.hpp"
#include "oracles.hpp"

using namespace hgcrp;
using fixtures::example_one;
using fixtures::make_instance;
using fixtures::make_partition;

namespace {

WeightedGraph random_graph(std::mt19937_64& rng, int max_vertices) {
    WeightedGraph g;
    g.vertex_count = 2 + static_cast<int>(rng() % (max_vertices - 1));
    for (int u = 0; u < g.vertex_count; ++u) {
        for (int v = u + 1; v < g.vertex_count; ++v) {
            if (rng() % 100 < 55) {
                Utility w(static_cast<std::int64_t>(rng() % 21),
                          static_cast<std::int64_t>(rng() % 4) + 1);
                g.edges.push_back({u, v, w});
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(validate_graph({2, {{0, 0, Utility(1)}}}), ValidationError);
    CHECK_THROWS_AS(validate_graph({2, {{0, 1, Utility(1)}, {1, 0, Utility(2)}}}),
                    ValidationError);
    CHECK_THROWS_AS(validate_graph({2, {{0, 2, Utility(1)}}}), ValidationError);
    CHECK_THROWS_AS(validate_graph({2, {{0, 1, Utility(-1)}}}), ValidationError);
    CHECK_NOTHROW(validate_graph({3, {{0, 1, Utility(1)}, {1, 2, Utility(0)}}}));
}

TEST_CASE("maximum weight matching on small graphs") {
    // Path a-b-c: the two edges exclude each other.
    WeightedGraph path{3, {{0, 1, Utility(3)}, {1, 2, Utility(3)}}};
    Matching m = max_weight_matching(path);
    CHECK(m.total_weight(path) == Utility(3));
    CHECK(m.edge_indices == std::vector<int>{0});  // canonical tie-break

    WeightedGraph triangle{3, {{0, 1, Utility(2)}, {1, 2, Utility(2)}, {0, 2, Utility(3)}}};
    Matching mt = max_weight_matching(triangle);
    CHECK(mt.total_weight(triangle) == Utility(3));
    CHECK(mt.edge_indices == std::vector<int>{2});

    // The two-agent welfare graph: pairing up (weight 5) beats 3 + 1.
    WeightedGraph pairing{4, {{0, 2, Utility(3)}, {1, 3, Utility(1)}, {0, 1, Utility(5)}}};
    Matching mp = max_weight_matching(pairing);
    CHECK(mp.total_weight(pairing) == Utility(5));
    CHECK(mp.edge_indices == std::vector<int>{2});

    WeightedGraph empty{4, {}};
    CHECK(max_weight_matching(empty).edge_indices.empty());
}

TEST_CASE("blossom handling on odd structures") {
    // 5-cycle, unit weights: two disjoint edges fit.
    WeightedGraph c5{5,
                     {{0, 1, Utility(1)},
                      {1, 2, Utility(1)},
                      {2, 3, Utility(1)},
                      {3, 4, Utility(1)},
                      {0, 4, Utility(1)}}};
    CHECK(max_weight_matching(c5).total_weight(c5) == Utility(2));

    // Triangle plus pendant: taking the pendant edge frees a triangle edge.
    WeightedGraph paw{4,
                      {{0, 1, Utility(2)},
                       {1, 2, Utility(2)},
                       {0, 2, Utility(2)},
                       {2, 3, Utility(2)}}};
    CHECK(max_weight_matching(paw).total_weight(paw) == Utility(4));

    // Two triangles joined by a bridge; optimum must use the bridge's ends
    // carefully (classic blossom exercise).
    WeightedGraph bowtie{6,
                         {{0, 1, Utility(3)},
                          {1, 2, Utility(3)},
                          {0, 2, Utility(3)},
                          {2, 3, Utility(1)},
                          {3, 4, Utility(3)},
                          {4, 5, Utility(3)},
                          {3, 5, Utility(3)}}};
    Matching mb = max_weight_matching(bowtie);
    CHECK(mb.total_weight(bowtie) == oracles::brute_matching_weight(bowtie));
}

TEST_CASE("matching equals the brute-force oracle on random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 120; ++trial) {
        WeightedGraph g = random_graph(rng, 11);
        Matching m = max_weight_matching(g);
        CHECK(m.total_weight(g) == oracles::brute_matching_weight(g));
        // sanity: result is a matching
        std::vector<char> used(g.vertex_count, 0);
        for (int k : m.edge_indices) {
            CHECK_FALSE(used[g.edges[k].u]);
            CHECK_FALSE(used[g.edges[k].v]);
            used[g.edges[k].u] = used[g.edges[k].v] = 1;
        }
    }
}

TEST_CASE("match2_opt on the two-agent pair-or-alone games") {
    // Pairing at 5/2 each beats 3 + 1 in total welfare; the pair is kept
    // formable through the exemption even though agent 0 prefers solitude.
    Instance together = make_instance(
        2, {{{0}, 3}, {{1}, 1}, {{0, 1}, Utility(5, 2)}}, /*allow_non_ir=*/true);
    Partition opt = match2_opt(together);
    CHECK(opt == make_partition(together, {{0, 1}}));
    CHECK(welfare(together, opt) == Utility(5));

    // At 3/2 the pair is not individually rational, hence simply unlisted:
    // the graph has no pair edge and both agents stay alone.
    Instance apart = make_instance(2, {{{0}, 3}, {{1}, 1}});
    Partition alone = match2_opt(apart);
    CHECK(alone == make_partition(apart, {{0}, {1}}));
    CHECK(welfare(apart, alone) == Utility(4));

    Instance ex1 = example_one();
    Partition ex1_opt = match2_opt(ex1);
    CHECK(ex1_opt == make_partition(ex1, {{0, 1}}));
    CHECK(welfare(ex1, ex1_opt) == Utility(2));
}

TEST_CASE("size-2 algorithms reject larger coalitions") {
    Instance big = make_instance(3, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1, 2}, 1}});
    CHECK_THROWS_AS(match2_opt(big), ValidationError);
    CHECK_THROWS_AS(match2_pcis(big), ValidationError);
}

TEST_CASE("match2_opt welfare equals exhaustive optimum on random size-2 instances") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Instance inst = random_instance(n, std::min(2, n), Utility(1, 2), 6, 10000 + seed);
        CHECK(welfare(inst, match2_opt(inst)) == welfare(inst, socially_optimal(inst)));
    }
}

TEST_CASE("every agent saturates a side of the welfare graph") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Instance inst = random_instance(n, std::min(2, n), Utility(2, 3), 5, 11000 + seed);
        WeightedGraph g = match2_graph(inst);
        Matching m = max_weight_matching(g);
        for (int i = 0; i < n; ++i) {
            CHECK((m.saturates(g, i) || m.saturates(g, n + i)));
        }
    }
}

TEST_CASE("match2_pcis layers and guarantees") {
    Instance together = make_instance(
        2, {{{0}, 3}, {{1}, 1}, {{0, 1}, Utility(5, 2)}}, /*allow_non_ir=*/true);
    Partition pcis = match2_pcis(together);
    // beta = 3 forms {0} first; the welfare-optimal pair never forms.
    CHECK(pcis == make_partition(together, {{0}, {1}}));
    CHECK_FALSE(find_blocking_coalition(together, pcis));
    CHECK_FALSE(find_is_deviation(together, pcis));
    CHECK_FALSE(find_pareto_dominator(together, pcis));

    // In example one the top layer holds {0} and {0,1}; the pair places two
    // agents at the top utility instead of one.
    Instance ex1 = example_one();
    CHECK(match2_pcis(ex1) == make_partition(ex1, {{0, 1}}));

    Instance one = make_instance(1, {{{0}, 2}});
    CHECK(match2_pcis(one) == make_partition(one, {{0}}));

    auto layers = match2_pcis_layers(together);
    REQUIRE(layers.size() == 2);
    CHECK(layers[0].beta == Utility(3));
    CHECK(layers[0].matching_value == 1);
    CHECK(layers[1].beta == Utility(1));
    CHECK(layers[1].matching_value == 1);
}

TEST_CASE("match2_pcis passes all three checks on random size-2 instances") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Instance inst = random_instance(n, std::min(2, n), Utility(1, 2), 6, 12000 + seed);
        Partition pi = match2_pcis(inst);
        CHECK_FALSE(find_blocking_coalition(inst, pi));
        CHECK_FALSE(find_is_deviation(inst, pi));
        CHECK_FALSE(find_pareto_dominator(inst, pi));
    }
}

TEST_CASE("layer matching value counts the agents placed at beta") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Instance inst = random_instance(n, std::min(2, n), Utility(3, 4), 4, 13000 + seed);
        int placed = 0;
        for (const PcisLayer& layer : match2_pcis_layers(inst)) {
            std::int64_t agents_at_beta = 0;
            for (const Coalition& c : layer.formed) agents_at_beta += c.size();
            CHECK(agents_at_beta == layer.matching_value);
            placed += static_cast<int>(agents_at_beta);
        }
        CHECK(placed == n);
    }
}

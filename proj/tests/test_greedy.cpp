#include <doctest.h>

#include "fixtures.hpp"
#include "hgcrp/checks.hpp"
#include "hgcrp/exact.hpp"
#include "hgcrp/generators.hpp"
#include "hgcrp/greedy.hpp"

using namespace hgcrp;
using fixtures::example_one;
using fixtures::example_two;
using fixtures::make_instance;
using fixtures::make_partition;

TEST_CASE("greedy picks the best coalition first") {
    Instance ex2 = example_two();
    CHECK(greedy_solve(ex2) == make_partition(ex2, {{1, 2}, {0}}));

    Instance grand_best = make_instance(
        3, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{0, 1}, 2}, {{0, 1, 2}, 3}});
    CHECK(greedy_solve(grand_best) == make_partition(grand_best, {{0, 1, 2}}));

    // On the tight price-of-stability family greedy settles for 1 + eps.
    Instance pf = pos_family(4, Utility(1, 2));
    Partition pi = greedy_solve(pf);
    CHECK(pi == make_partition(pf, {{0}, {1}, {2}, {3}}));
    CHECK(welfare(pf, pi) == Utility(3, 2));
}

TEST_CASE("ties prefer the larger coalition, then lexicographic members") {
    // Utility 1 everywhere: the triple beats the pairs, {0,1} beats {0,2}.
    Instance flat = make_instance(3, {{{0}, 1},
                                      {{1}, 1},
                                      {{2}, 1},
                                      {{0, 1}, 1},
                                      {{0, 2}, 1},
                                      {{0, 1, 2}, 1}});
    CHECK(greedy_solve(flat) == make_partition(flat, {{0, 1, 2}}));

    Instance pairs = make_instance(3, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{0, 1}, 1}, {{0, 2}, 1}});
    CHECK(greedy_solve(pairs) == make_partition(pairs, {{0, 1}, {2}}));
}

TEST_CASE("greedy output is core stable and individually stable") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Instance inst = random_instance(n, n, Utility(1, 2), 6, 3000 + seed);
        Partition pi = greedy_solve(inst);
        CHECK_FALSE(find_blocking_coalition(inst, pi));
        CHECK_FALSE(find_is_deviation(inst, pi));
    }
}

TEST_CASE("greedy first pick attains the maximum psi entry of any partition") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 5);
        Instance inst = random_instance(n, std::min(3, n), Utility(2, 3), 5, 4000 + seed);
        Utility max_listed = inst.utility_at(0);
        for (int idx = 0; idx < inst.list_size(); ++idx) {
            max_listed = std::max(max_listed, inst.utility_at(idx));
        }
        CHECK(psi(inst, greedy_solve(inst)).values().front() == max_listed);
        Utility max_entry = 0;
        for (const Partition& pi : enumerate_ir_partitions(inst)) {
            max_entry = std::max(max_entry, psi(inst, pi).values().front());
        }
        CHECK(max_entry == max_listed);
    }
}

TEST_CASE("greedy welfare is within a factor n of the optimum") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Instance inst = random_instance(n, std::min<int>(3, n), Utility(1, 2), 6, 5000 + seed);
        Utility greedy_w = welfare(inst, greedy_solve(inst));
        Utility opt_w = welfare(inst, socially_optimal(inst));
        CHECK_FALSE(greedy_w * Utility(n) < opt_w);
    }
}

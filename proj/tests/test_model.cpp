#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hgcrp/generators.hpp"
#include "hgcrp/model.hpp"

using namespace hgcrp;
using fixtures::example_one;
using fixtures::example_three;
using fixtures::example_two;
using fixtures::make_instance;
using fixtures::make_partition;

TEST_CASE("coalitions are canonical sets") {
    Coalition c({3, 1, 2});
    CHECK(c.members() == std::vector<AgentId>{1, 2, 3});
    CHECK(c.str() == "1,2,3");
    CHECK(c.contains(2));
    CHECK_FALSE(c.contains(0));
    CHECK(c == Coalition({2, 3, 1}));
    CHECK_THROWS_AS(Coalition({}), ValidationError);
    CHECK_THROWS_AS(Coalition({1, 1}), ValidationError);
    CHECK_THROWS_AS(Coalition({-1}), ValidationError);

    CHECK(Coalition({0, 5}).intersects(Coalition({5, 9})));
    CHECK_FALSE(Coalition({0, 5}).intersects(Coalition({1, 4})));
    CHECK(Coalition({0, 1, 2}).difference(Coalition({1})) == std::vector<AgentId>{0, 2});

    CHECK(size_lex_less(Coalition({7}), Coalition({0, 1})));
    CHECK(size_lex_less(Coalition({0, 2}), Coalition({0, 3})));
}

TEST_CASE("instance validation") {
    CHECK_NOTHROW(example_one());
    CHECK_NOTHROW(make_instance(1, {{{0}, 0}}));  // smallest legal instance

    // Missing singleton.
    CHECK_THROWS_AS(make_instance(2, {{{0}, 1}, {{0, 1}, 1}}), ValidationError);
    // Listed coalition not individually rational: {0,1} below agent 0 alone.
    CHECK_THROWS_AS(make_instance(2, {{{0}, 1}, {{1}, 0}, {{0, 1}, 0}}), ValidationError);
    // Same map accepted under the exemption.
    CHECK_NOTHROW(make_instance(2, {{{0}, 1}, {{1}, 0}, {{0, 1}, 0}}, true));
    // Member out of range.
    CHECK_THROWS_AS(make_instance(2, {{{0}, 1}, {{1}, 1}, {{2}, 1}}), ValidationError);
    // Negative utility.
    CHECK_THROWS_AS(make_instance(1, {{{0}, Utility(-1)}}), ValidationError);

    Instance ex2 = example_two();
    CHECK(ex2.agent_count() == 3);
    CHECK(ex2.list_size() == 7);
    CHECK(ex2.utility(Coalition({1, 2})) == Utility(2));
    CHECK(ex2.singleton_utility(0) == Utility(0));
    CHECK_FALSE(ex2.is_listed(Coalition({0, 3})));
    CHECK_THROWS_AS(ex2.utility(Coalition({3})), ValidationError);
    CHECK(ex2.coalitions_containing(2).size() == 4);
}

TEST_CASE("zero utility non-singleton is listable when its singletons are zero") {
    Instance inst = make_instance(2, {{{0}, 0}, {{1}, 0}, {{0, 1}, 0}});
    CHECK(inst.utility(Coalition({0, 1})) == Utility(0));
}

TEST_CASE("partition validation and canonical order") {
    Instance ex2 = example_two();
    Partition pi = make_partition(ex2, {{2}, {0, 1}});
    CHECK(pi.coalitions().front() == Coalition({0, 1}));  // sorted by min member
    CHECK(pi.coalition_of(2) == Coalition({2}));
    CHECK(pi.str() == "{{0,1},{2}}");

    // Not a partition: overlap / missing agent / unlisted coalition.
    CHECK_THROWS_AS(make_partition(ex2, {{0, 1}, {1, 2}}), ValidationError);
    CHECK_THROWS_AS(make_partition(ex2, {{0, 1}}), ValidationError);
    Instance no_pair = make_instance(2, {{{0}, 1}, {{1}, 1}});
    CHECK_THROWS_AS(make_partition(no_pair, {{0, 1}}), ValidationError);

    CHECK(make_partition(ex2, {{0, 1}, {2}}) < make_partition(ex2, {{0, 2}, {1}}));
}

TEST_CASE("utility_of follows the joint utility of the home coalition") {
    Instance ex2 = example_two();
    Partition pi = make_partition(ex2, {{0, 1}, {2}});
    CHECK(utility_of(ex2, pi, 2) == Utility(1));
    CHECK(utility_of(ex2, pi, 0) == Utility(1));

    Instance ex1 = example_one();
    Partition singles = make_partition(ex1, {{0}, {1}});
    CHECK(utility_of(ex1, singles, 1) == Utility(0));
    CHECK_THROWS_AS(utility_of(ex1, singles, 2), ValidationError);

    // On the all-singleton partition every agent gets its singleton utility.
    Instance rnd = random_instance(6, 3, Utility(1, 2), 6, 42);
    std::vector<Coalition> singletons;
    for (int i = 0; i < 6; ++i) singletons.push_back(Coalition::singleton(i));
    Partition alone(rnd, singletons);
    for (int i = 0; i < 6; ++i) {
        CHECK(utility_of(rnd, alone, i) == rnd.singleton_utility(i));
    }
}

TEST_CASE("psi sorts utilities non-increasing") {
    Instance ex2 = example_two();
    CHECK(psi(ex2, make_partition(ex2, {{1, 2}, {0}})).values() ==
          std::vector<Utility>{2, 2, 0});
    Instance ex1 = example_one();
    CHECK(psi(ex1, make_partition(ex1, {{0, 1}})).values() == std::vector<Utility>{1, 1});
}

TEST_CASE("psi is the multiset of per-agent utilities") {
    Instance rnd = random_instance(6, 6, Utility(3, 4), 5, 7);
    std::vector<Coalition> parts;
    std::mt19937_64 rng(3);
    // Assemble a few random valid partitions greedily from the list.
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<char> placed(6, 0);
        parts.clear();
        for (int a = 0; a < 6; ++a) {
            if (placed[a]) continue;
            std::vector<int> options;
            for (int idx : rnd.coalitions_containing(a)) {
                const Coalition& c = rnd.coalition_at(idx);
                bool free = true;
                for (AgentId m : c.members()) free = free && !placed[m];
                if (free) options.push_back(idx);
            }
            const Coalition& pick = rnd.coalition_at(options[rng() % options.size()]);
            for (AgentId m : pick.members()) placed[m] = 1;
            parts.push_back(pick);
        }
        Partition pi(rnd, parts);
        std::vector<Utility> expected;
        for (int a = 0; a < 6; ++a) expected.push_back(utility_of(rnd, pi, a));
        CHECK(psi(rnd, pi) == PsiVector(expected));
    }
}

TEST_CASE("psi_compare is exact lexicographic") {
    PsiVector a({Utility(2), Utility(2), Utility(0)});
    PsiVector b({Utility(1), Utility(1), Utility(1)});
    CHECK(psi_compare(a, b) == Ordering::greater);
    CHECK(psi_compare(b, a) == Ordering::less);
    CHECK(psi_compare(b, b) == Ordering::equal);

    PsiVector c({Utility(1), Utility(1, 2), Utility(1, 2)});
    PsiVector d({Utility(1), Utility(1, 2), Utility(1, 3)});
    CHECK(psi_compare(c, d) == Ordering::greater);

    CHECK_THROWS_AS(psi_compare(a, PsiVector({Utility(1)})), ValidationError);
}

TEST_CASE("psi_compare is transitive and antisymmetric on random triples") {
    std::mt19937_64 rng(9);
    auto random_vec = [&]() {
        std::vector<Utility> v;
        for (int i = 0; i < 4; ++i) {
            v.emplace_back(static_cast<std::int64_t>(rng() % 5),
                           static_cast<std::int64_t>(rng() % 3) + 1);
        }
        return PsiVector(v);
    };
    for (int i = 0; i < 300; ++i) {
        PsiVector a = random_vec(), b = random_vec(), c = random_vec();
        if (psi_compare(a, b) == Ordering::greater && psi_compare(b, c) == Ordering::greater) {
            CHECK(psi_compare(a, c) == Ordering::greater);
        }
        if (psi_compare(a, b) == Ordering::equal) {
            CHECK(a == b);
            CHECK(psi_compare(b, a) == Ordering::equal);
        } else if (psi_compare(a, b) == Ordering::greater) {
            CHECK(psi_compare(b, a) == Ordering::less);
        }
    }
}

TEST_CASE("induced partition") {
    Instance ex2 = example_two();
    Partition pi = make_partition(ex2, {{0, 1}, {2}});
    CHECK(induced_partition(ex2, pi, Coalition({1, 2})) == make_partition(ex2, {{0}, {1, 2}}));

    // Deviating to one's own coalition changes nothing.
    CHECK(induced_partition(ex2, pi, Coalition({0, 1})) == pi);

    Instance ex1 = example_one();
    Partition pair = make_partition(ex1, {{0, 1}});
    CHECK(induced_partition(ex1, pair, Coalition({0})) == make_partition(ex1, {{0}, {1}}));

    // Residual {0,1} of the grand coalition is not listed here.
    Instance inst = make_instance(
        3, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1, 2}, 1}});
    Partition grand = make_partition(inst, {{0, 1, 2}});
    CHECK_THROWS_WITH_AS(induced_partition(inst, grand, Coalition({2})),
                         doctest::Contains("{0,1}"), ValidationError);
    // Unlisted deviating coalition is rejected outright.
    CHECK_THROWS_AS(induced_partition(inst, grand, Coalition({1, 2})), ValidationError);
}

TEST_CASE("induced partition preserves the cover invariant when it succeeds") {
    Instance rnd = random_instance(6, 6, Utility(1), 4, 15);
    Partition pi = make_partition(rnd, {{0, 1, 2}, {3}, {4, 5}});
    for (int idx = 0; idx < rnd.list_size(); ++idx) {
        const Coalition& s = rnd.coalition_at(idx);
        try {
            Partition moved = induced_partition(rnd, pi, s);
            CHECK(moved.agent_count() == 6);
            for (AgentId a : s.members()) CHECK(moved.coalition_of(a) == s);
        } catch (const ValidationError&) {
            // acceptable: some residual is unlisted
        }
    }
}

TEST_CASE("welfare is the exact coalition-size weighted sum") {
    Instance ex2 = example_two();
    CHECK(welfare(ex2, make_partition(ex2, {{1, 2}, {0}})) == Utility(4));  // 2+2+0
    Instance ex1 = example_one();
    CHECK(welfare(ex1, make_partition(ex1, {{0, 1}})) == Utility(2));

    Instance pf = pos_family(4, Utility(1, 2));
    Partition grand = make_partition(pf, {{0, 1, 2, 3}});
    CHECK(welfare(pf, grand) == Utility(4));

    Instance rnd = random_instance(7, 4, Utility(1, 2), 6, 99);
    std::vector<Coalition> singletons;
    for (int i = 0; i < 7; ++i) singletons.push_back(Coalition::singleton(i));
    Partition alone(rnd, singletons);
    Utility direct = 0;
    for (int i = 0; i < 7; ++i) direct += utility_of(rnd, alone, i);
    CHECK(welfare(rnd, alone) == direct);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsc/error.hpp"
#include "lsc/gadgets.hpp"
#include "lsc/generate.hpp"
#include "lsc/kernel.hpp"
#include "lsc/solvers.hpp"
#include "support/oracles.hpp"

using namespace lsc;

namespace {

SetCollection with_pair(int copies) {
    SetCollection sets;
    for (int i = 0; i < copies; ++i) sets.push_back({0, 1, 2 + i});
    return sets;
}

SetCollection with_element(int copies) {
    SetCollection sets;
    for (int i = 0; i < copies; ++i) sets.push_back({0, 1 + i});
    return sets;
}

}  // namespace

TEST_CASE("pair reduction fires strictly above 6k") {
    PairStage fired = reduce_pairs(with_pair(7), 1);
    CHECK(fired.c1 == SetCollection{{0, 1}});
    REQUIRE(fired.reductions.size() == 1);
    CHECK(fired.reductions[0].first == 0);
    CHECK(fired.reductions[0].second == 1);
    CHECK(fired.reductions[0].removed == 7);

    PairStage quiet = reduce_pairs(with_pair(6), 1);
    CHECK(quiet.c1 == with_pair(6));
    CHECK(quiet.reductions.empty());

    CHECK(reduce_pairs(with_pair(12), 2).reductions.empty());
    CHECK(reduce_pairs(with_pair(13), 2).c1 == SetCollection{{0, 1}});
    CHECK_THROWS_AS(reduce_pairs(with_pair(3), 0), std::invalid_argument);
}

TEST_CASE("singleton reduction fires strictly above 6k^2") {
    SingletonStage fired = reduce_singletons(with_element(7), 1);
    CHECK(fired.c2 == SetCollection{{0}});
    REQUIRE(fired.reductions.size() == 1);
    CHECK(fired.reductions[0].removed == 7);

    CHECK(reduce_singletons(with_element(6), 1).c2 == with_element(6));
    CHECK(reduce_singletons(with_element(24), 2).reductions.empty());
    CHECK(reduce_singletons(with_element(25), 2).c2 == SetCollection{{0}});
    CHECK(reduce_singletons({}, 1).c2.empty());
}

TEST_CASE("single pass counts on the input collection") {
    // Pairs (0,1), (0,2), (1,2) all occur 7 times.
    SetCollection sets;
    for (int i = 0; i < 7; ++i) sets.push_back({0, 1, 2, 3 + i});
    PairStage fix = reduce_pairs(sets, 1, ReductionMode::fixpoint);
    CHECK(fix.c1 == SetCollection{{0, 1}});
    PairStage once = reduce_pairs(sets, 1, ReductionMode::single_pass);
    CHECK(once.c1 == SetCollection{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(once.reductions.size() == 3);
    CHECK(once.reductions[1].removed == 0);
}

TEST_CASE("kernelize examples") {
    CoverInstance g = to_cover_instance(build(grid(2, 2)));
    KernelTrace t = kernelize(g, 1);
    CHECK(t.c2 == t.input);
    CHECK(t.c2.size() == 2);
    CHECK(t.verdict == KernelVerdict::kernel);

    KernelTrace zero = kernelize(g, 0);
    CHECK(zero.verdict == KernelVerdict::no_solution_at_most_k);

    // Ladder: both rails bound all seven rungs' cells and the unbounded one.
    CoverInstance ladder = to_cover_instance(build(grid(2, 8)));
    KernelTrace l = kernelize(ladder, 1);
    REQUIRE(l.pair_reductions.size() == 1);
    CHECK(l.pair_reductions[0].removed == 8);
    CHECK(l.c1 == SetCollection{{0, 1}});
    CHECK(l.c2 == SetCollection{{0, 1}});
    FptResult r = solve_fpt(ladder, 1);
    REQUIRE(r.cover);
    CHECK(r.cover->chosen == std::vector<int>{0});
}

TEST_CASE("k at least n always yields a kernel") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_axis_parallel(8, 10, seed);
        CoverInstance ci = to_cover_instance(build(inst));
        CHECK(kernelize(ci, std::max(1, inst.size())).verdict == KernelVerdict::kernel);
    }
}

TEST_CASE("solve_fpt examples") {
    CoverInstance g = to_cover_instance(build(grid(2, 2)));
    FptResult one = solve_fpt(g, 1);
    REQUIRE(one.cover);
    CHECK(one.cover->size() == 1);
    CHECK_FALSE(solve_fpt(g, 0).cover);

    GadgetLayout k2 = build_gadget(make_graph(2, {{0, 1}}));
    CoverOptions rect;
    rect.target = TargetMode::rectangular_cells;
    CoverInstance ci = to_cover_instance(build(k2.instance), rect);
    FptResult three = solve_fpt(ci, 3);
    REQUIRE(three.cover);
    CHECK(three.cover->size() == 3);
    CHECK(is_feasible(ci, *three.cover));
    CHECK_FALSE(solve_fpt(ci, 2).cover);
}

TEST_CASE("reductions preserve the optimum when a size-k cover exists") {
    std::vector<Instance> suite;
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        suite.push_back(seed % 4 ? random_axis_parallel(12, 10, seed) : random_general(10, 10, seed));
    for (int rows = 1; rows <= 3; ++rows)
        for (int cols = 1; rows + cols <= 12; ++cols) suite.push_back(grid(rows, cols));
    int fired = 0;
    for (const Instance& inst : suite) {
        CoverInstance ci = to_cover_instance(build(inst));
        int opt = oracle::min_cover_size(ci.unmerged, ci.num_segments).value();
        for (int k = std::max(1, opt); k <= std::max(1, opt) + 2; ++k) {
            KernelTrace t = kernelize(ci, k);
            fired += static_cast<int>(t.pair_reductions.size() + t.singleton_reductions.size());
            CHECK(oracle::min_cover_size(t.c1, ci.num_segments) == opt);
            CHECK(oracle::min_cover_size(t.c2, ci.num_segments) == opt);
            CHECK(t.verdict == KernelVerdict::kernel);
            CHECK(static_cast<std::int64_t>(t.c2.size()) <= 6LL * k * k * k);
        }
        if (opt >= 1) {
            FptResult at = solve_fpt(ci, opt);
            REQUIRE(at.cover);
            CHECK(at.cover->size() == opt);
            CHECK(is_feasible(ci, *at.cover));
        }
        if (opt >= 2) CHECK_FALSE(solve_fpt(ci, opt - 1).cover);
    }
    CHECK(fired > 0);
}

TEST_CASE("bitmask DP matches the subset oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        int m = static_cast<int>(rng() % 25);
        int universe = 1 + static_cast<int>(rng() % 10);
        SetCollection sets;
        for (int i = 0; i < m; ++i) {
            std::vector<int> s;
            for (int e = 0; e < universe; ++e)
                if (rng() % 3 == 0) s.push_back(e);
            if (s.empty()) s.push_back(static_cast<int>(rng() % universe));
            sets.push_back(s);
        }
        auto dp = hitting_set_dp(sets);
        REQUIRE(dp);
        CHECK(hits_all(sets, *dp));
        CHECK(static_cast<int>(dp->size()) == oracle::min_cover_size(sets, universe).value());
    }
    CHECK(hitting_set_dp({}) == std::vector<int>{});
    CHECK_THROWS_AS(hitting_set_dp(SetCollection(25, {0})), TooLarge);
}

TEST_CASE("parallel pair counting matches the serial reference") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        SetCollection sets;
        for (int i = 0; i < 300; ++i) {
            std::vector<int> s;
            for (int e = 0; e < 30; ++e)
                if (rng() % 6 == 0) s.push_back(e);
            sets.push_back(s);
        }
        CHECK(count_pairs(sets) == count_pairs_serial(sets));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respart/lab.hpp"
#include "test_helpers.hpp"

using namespace respart;

TEST_CASE("prufer decoding") {
    auto k2 = tree_from_prufer({});
    CHECK(k2 == Graph::from_edge_list(2, {{0, 1}}));

    auto star = tree_from_prufer({0, 0, 0});
    CHECK(star == fixtures::star(4));

    auto chain = tree_from_prufer({1, 2});
    CHECK(chain == Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}));

    CHECK_THROWS_WITH_AS(tree_from_prufer({5}), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("prufer round trip") {
    for (int n = 3; n <= 8; ++n)
        for (uint64_t seed = 1; seed <= 25; ++seed) {
            auto g = random_tree(n, seed * 1000 + n);
            CHECK(tree_from_prufer(prufer_from_tree(g)) == g);
        }
}

TEST_CASE("labeled enumeration counts") {
    CHECK(labeled_tree_count(2) == 1);
    CHECK(labeled_tree_count(3) == 3);
    CHECK(labeled_tree_count(4) == 16);
    CHECK(labeled_tree_count(5) == 125);
    CHECK_THROWS_WITH_AS(labeled_tree_count(10), doctest::Contains("TooLarge"), Error);

    for (int n : {3, 4, 5}) {
        uint64_t seen = 0;
        all_trees(n, [&](const Graph& g) {
            CHECK(is_tree(g));
            ++seen;
        });
        CHECK(seen == labeled_tree_count(n));
    }
}

TEST_CASE("random trees are deterministic in the seed") {
    auto a = random_tree(6, 42);
    auto b = random_tree(6, 42);
    CHECK(a == b);
    CHECK(is_tree(a));
}

TEST_CASE("random generalized trees") {
    GenTreeParams params{2, 6, 2, 5, 12};
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        auto made = random_generalized_tree(params, seed);
        CHECK(is_generalized_tree(made.graph));
        CHECK(made.graph.vertex_count() <= 12);
        CHECK(made.build.steps.size() >= 2);
        auto again = random_generalized_tree(params, seed);
        CHECK(made.graph == again.graph);
    }
    GenTreeParams one_block{1, 1, 2, 5, 0};
    CHECK_THROWS_WITH_AS(random_generalized_tree(one_block, 7),
                         doctest::Contains("InvalidRange"), Error);
}

TEST_CASE("build sequences") {
    BuildSequence seq{{{3, -1}, {3, 2}, {2, 0}}};
    auto g = gen_tree_from_build(seq);
    CHECK(g.vertex_count() == 6);
    CHECK(is_generalized_tree(g));
    CHECK(to_string(seq) == "K3;K3@2;K2@0");

    CHECK_THROWS_AS(gen_tree_from_build(BuildSequence{{{1, -1}}}), Error);
    CHECK_THROWS_AS(gen_tree_from_build(BuildSequence{{{3, -1}, {3, 9}}}), Error);
}

TEST_CASE("tree sweep over small orders is clean") {
    TreeSweepParams params;
    params.min_n = 2;
    params.max_n = 6;
    params.pd_max_n = 6;
    params.dim_max_n = 6;
    auto result = sweep_trees(params);
    CHECK(result.instances == 1 + 3 + 16 + 125 + 1296);
    CHECK(result.passed());
}

TEST_CASE("fault injection is detected") {
    TreeSweepParams params;
    params.min_n = 4;
    params.max_n = 5;
    params.pd_max_n = 5;
    params.dim_max_n = 5;
    params.fault_bound = "pd_le_branch_bound";
    params.fault_offset = -1;
    auto result = sweep_trees(params);
    CHECK(!result.passed());
    bool fault_seen = false;
    for (const auto& v : result.violations) fault_seen |= v.check == "pd_le_branch_bound";
    CHECK(fault_seen);
}

TEST_CASE("gen tree sweep over a few seeds is clean") {
    GenTreeSweepParams params;
    params.seed_begin = 1;
    params.seed_end = 21;
    auto result = sweep_gen_trees(params);
    CHECK(result.instances == 20);
    CHECK(result.passed());
}

TEST_CASE("tree sweep sharding by rank") {
    TreeSweepParams all;
    all.min_n = 5;
    all.max_n = 5;
    all.pd_max_n = 5;
    all.dim_max_n = 5;
    TreeSweepParams lo = all, hi = all;
    lo.rank_end = 60;
    hi.rank_begin = 60;
    auto full = sweep_trees(all);
    auto first = sweep_trees(lo);
    auto second = sweep_trees(hi);
    CHECK(first.instances + second.instances == full.instances);
    CHECK(first.passed());
    CHECK(second.passed());
}

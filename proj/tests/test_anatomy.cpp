#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "respart/anatomy.hpp"
#include "respart/lab.hpp"
#include "respart/resolver.hpp"
#include "test_helpers.hpp"

using namespace respart;

namespace {

TreeAnatomy anatomy_of(const Graph& g) { return tree_anatomy(g, all_pairs_distances(g)); }

}  // namespace

TEST_CASE("spider222 anatomy") {
    auto anat = anatomy_of(fixtures::spider222());
    CHECK(anat.branch_vertices == std::vector<int>{0});
    CHECK(anat.leaf_count() == 3);
    CHECK(anat.exterior_count() == 1);
    CHECK(anat.multi_count() == 1);
    CHECK(anat.max_terminal_degree == 3);
    CHECK(anat.supports == std::vector<int>{1, 3, 5});
    CHECK(anat.max_support_leaves == 1);
}

TEST_CASE("dstar anatomy") {
    auto anat = anatomy_of(fixtures::dstar());
    CHECK(anat.leaf_count() == 4);
    CHECK(anat.exterior_count() == 2);
    CHECK(anat.multi_count() == 2);
    CHECK(anat.max_terminal_degree == 2);
    CHECK(anat.supports == std::vector<int>{0, 1});
    CHECK(anat.max_support_leaves == 2);
    CHECK(anat.nearest_branch[2] == 0);
    CHECK(anat.nearest_branch[4] == 1);
}

TEST_CASE("cat32 anatomy") {
    auto anat = anatomy_of(fixtures::cat32());
    CHECK(anat.multi_count() == 3);
    CHECK(anat.max_terminal_degree == 2);
    CHECK(anat.leaf_count() == 6);
    CHECK(anat.exterior_count() == 3);
}

TEST_CASE("anatomy preconditions") {
    auto c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_THROWS_WITH_AS(anatomy_of(c4), doctest::Contains("NotATree"), Error);
    CHECK_THROWS_WITH_AS(anatomy_of(fixtures::path(5)), doctest::Contains("IsAPath"), Error);
}

TEST_CASE("terminal ordering: longest leg first, ties by leaf id") {
    auto g = fixtures::spider({3, 1, 1, 1});  // leaves 3,4,5,6; leg to 3 is longest
    auto anat = anatomy_of(g);
    REQUIRE(anat.exterior_count() == 1);
    CHECK(anat.exterior[0].terminals == std::vector<int>{3, 4, 5, 6});
    CHECK(anat.exterior[0].legs[0] == std::vector<int>{1, 2, 3});
    CHECK(anat.exterior[0].legs[1] == std::vector<int>{4});
}

TEST_CASE("path support stats") {
    auto p2 = support_stats(fixtures::path(2));
    CHECK(p2.supports.size() == 2);
    CHECK(p2.max_support_leaves == 1);
    auto p3 = support_stats(fixtures::path(3));
    CHECK(p3.supports == std::vector<int>{1});
    CHECK(p3.max_support_leaves == 2);
    for (int n = 4; n <= 9; ++n) {
        auto st = support_stats(fixtures::path(n));
        CHECK(st.supports.size() == 2);
        CHECK(st.max_support_leaves == 1);
    }
}

TEST_CASE("gen tree anatomy: path P5") {
    auto g = fixtures::path(5);
    auto anat = gen_tree_anatomy(g, block_decomposition(g));
    REQUIRE(anat.support_cut_count() == 2);
    CHECK(anat.support_cuts[0].vertex == 1);
    CHECK(anat.support_cuts[0].outer_extremes == std::vector<int>{0});
    CHECK(anat.support_cuts[1].vertex == 3);
    CHECK(anat.support_cuts[1].outer_extremes == std::vector<int>{4});
    CHECK(anat.hub_block_count() == 0);
    CHECK(anat.max_fan == 1);
}

TEST_CASE("gen tree anatomy: three triangles on a central triangle") {
    // central triangle 0,1,2; an outer triangle glued at each of its vertices
    auto g = Graph::from_edge_list(9, {{0, 1}, {0, 2}, {1, 2},
                                       {0, 3}, {0, 4}, {3, 4},
                                       {1, 5}, {1, 6}, {5, 6},
                                       {2, 7}, {2, 8}, {7, 8}});
    auto anat = gen_tree_anatomy(g, block_decomposition(g));
    CHECK(anat.support_cut_count() == 3);
    for (const auto& sc : anat.support_cuts) CHECK(sc.outer_extremes.size() == 2);
    CHECK(anat.hub_block_count() == 0);
    CHECK(anat.max_fan == 2);
}

TEST_CASE("gen tree anatomy: K4 glued to K4") {
    auto g = fixtures::two_k4();
    auto anat = gen_tree_anatomy(g, block_decomposition(g));
    REQUIRE(anat.support_cut_count() == 1);
    CHECK(anat.support_cuts[0].vertex == 0);
    CHECK(anat.support_cuts[0].outer_extremes == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(anat.hub_block_count() == 0);
    CHECK(anat.max_fan == 6);
}

TEST_CASE("gen tree anatomy: hub block") {
    // two triangles joined by a K4 sharing one vertex with each
    auto g = Graph::from_edge_list(8, {{0, 1}, {0, 2}, {1, 2},           // triangle at 0..2
                                       {2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 5},  // K4
                                       {5, 6}, {5, 7}, {6, 7}});         // triangle at 5..7
    auto bd = block_decomposition(g);
    auto anat = gen_tree_anatomy(g, bd);
    REQUIRE(anat.hub_block_count() == 1);
    CHECK(anat.hub_blocks[0].extremes == std::vector<int>{3, 4});  // K4 minus its two cuts
    CHECK(anat.support_cut_count() == 2);
    CHECK(anat.max_fan == 2);
}

TEST_CASE("dim formula matches brute force over all trees up to n=7") {
    for (int n = 4; n <= 7; ++n) {
        all_trees(n, [&](const Graph& g) {
            if (is_path_graph(g)) return;
            auto dm = all_pairs_distances(g);
            auto anat = tree_anatomy(g, dm);
            auto dim = metric_dimension_exact(g, dm);
            CHECK(anat.leaf_count() - anat.exterior_count() == dim.dimension);
        });
    }
}

TEST_CASE("structural invariants over all trees up to n=8") {
    for (int n = 4; n <= 8; ++n) {
        all_trees(n, [&](const Graph& g) {
            if (is_path_graph(g)) return;
            auto dm = all_pairs_distances(g);
            auto anat = tree_anatomy(g, dm);
            // some branch vertex owns at least two terminals
            CHECK(anat.multi_count() >= 1);
            CHECK(anat.max_terminal_degree >= 2);
            // kappa + tau <= xi + theta
            CHECK(anat.multi_count() + anat.max_terminal_degree <=
                  anat.support_count() + anat.max_support_leaves);
            // every leaf has an owner; legs of one group are disjoint
            for (const auto& grp : anat.exterior) {
                std::set<int> seen;
                for (const auto& leg : grp.legs)
                    for (int v : leg) CHECK(seen.insert(v).second);
            }
        });
    }
}

TEST_CASE("trees viewed as generalized trees, n <= 8") {
    for (int n = 3; n <= 8; ++n) {
        all_trees(n, [&](const Graph& g) {
            auto bd = block_decomposition(g);
            auto anat = gen_tree_anatomy(g, bd);
            auto st = support_stats(g);
            CHECK(anat.support_cut_count() == static_cast<int>(st.supports.size()));
            CHECK(anat.max_fan == st.max_support_leaves);
            CHECK(anat.hub_block_count() == 0);
        });
    }
}

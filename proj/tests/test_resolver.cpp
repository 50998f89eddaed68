#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "respart/lab.hpp"
#include "respart/resolver.hpp"
#include "test_helpers.hpp"

using namespace respart;

namespace {

// Independent pd oracle for tiny graphs: try every surjective class
// assignment (not just canonical growth strings) and test resolvability via
// the public representation path. Deliberately dumb.
int pd_by_assignment_enumeration(const Graph& g, const DistanceMatrix& dm) {
    int n = g.vertex_count();
    if (n == 1) return 1;
    for (int t = 2; t <= n; ++t) {
        std::vector<int> assign(n, 0);
        while (true) {
            std::set<int> used(assign.begin(), assign.end());
            if (static_cast<int>(used.size()) == t) {
                VertexPartition pi;
                pi.classes.resize(t);
                for (int v = 0; v < n; ++v) pi.classes[assign[v]].push_back(v);
                bool ok = true;
                for (auto& cls : pi.classes) ok = ok && !cls.empty();
                if (ok && is_resolving_partition(dm, pi).resolving) return t;
            }
            int i = n - 1;
            while (i >= 0 && assign[i] == t - 1) assign[i--] = 0;
            if (i < 0) break;
            ++assign[i];
        }
    }
    return n;
}

}  // namespace

TEST_CASE("partition representations") {
    auto p5 = fixtures::path(5);
    auto dm = all_pairs_distances(p5);
    VertexPartition pi{{{0}, {1, 2, 3, 4}}};
    CHECK(partition_representation(dm, pi, 3) == Representation{3, 0});

    auto k14 = fixtures::star(4);
    auto dm14 = all_pairs_distances(k14);
    VertexPartition star_pi{{{0, 1}, {2}, {3}, {4}}};
    CHECK(partition_representation(dm14, star_pi, 0) == Representation{0, 1, 1, 1});

    VertexPartition whole{{{0, 1, 2, 3, 4}}};
    CHECK(partition_representation(dm, whole, 2) == Representation{0});
}

TEST_CASE("resolving partition verdicts") {
    auto p5 = fixtures::path(5);
    auto dm = all_pairs_distances(p5);
    CHECK(is_resolving_partition(dm, VertexPartition{{{0}, {1, 2, 3, 4}}}).resolving);

    auto k14 = fixtures::star(4);
    auto dm14 = all_pairs_distances(k14);
    auto verdict = is_resolving_partition(dm14, VertexPartition{{{0}, {1, 2}, {3}, {4}}});
    CHECK(!verdict.resolving);
    CHECK(*verdict.witness == std::pair<int, int>{1, 2});

    VertexPartition singletons{{{0}, {1}, {2}, {3}, {4}}};
    CHECK(is_resolving_partition(dm, singletons).resolving);
}

TEST_CASE("partition validation failures") {
    auto dm = all_pairs_distances(fixtures::path(3));
    CHECK_THROWS_WITH_AS(is_resolving_partition(dm, VertexPartition{{{0}, {1}}}),
                         doctest::Contains("InvalidPartition"), Error);
    CHECK_THROWS_AS(is_resolving_partition(dm, VertexPartition{{{0, 1}, {1, 2}}}), Error);
    CHECK_THROWS_AS(is_resolving_partition(dm, VertexPartition{{{0, 1, 2}, {}}}), Error);
}

TEST_CASE("metric representations and sets") {
    auto p5 = fixtures::path(5);
    auto dm = all_pairs_distances(p5);
    CHECK(is_resolving_set(dm, {0}).resolving);

    auto k14 = fixtures::star(4);
    auto dm14 = all_pairs_distances(k14);
    CHECK(metric_representation(dm14, {1, 2, 3}, 4) == Representation{2, 2, 2});
    CHECK(is_resolving_set(dm14, {1, 2, 3}).resolving);
    auto verdict = is_resolving_set(dm14, {1, 2});
    CHECK(!verdict.resolving);
    CHECK(*verdict.witness == std::pair<int, int>{3, 4});
}

TEST_CASE("exact partition dimension on the named instances") {
    auto p7 = fixtures::path(7);
    auto pd7 = partition_dimension_exact(p7, all_pairs_distances(p7));
    CHECK(pd7.dimension == 2);

    auto k14 = fixtures::star(4);
    auto pd_star = partition_dimension_exact(k14, all_pairs_distances(k14));
    CHECK(pd_star.dimension == 4);

    auto ds = fixtures::dstar();
    auto pd_ds = partition_dimension_exact(ds, all_pairs_distances(ds));
    CHECK(pd_ds.dimension == 3);
    CHECK(is_resolving_partition(all_pairs_distances(ds), pd_ds.witness).resolving);
}

TEST_CASE("exact metric dimension on the named instances") {
    auto p7 = fixtures::path(7);
    CHECK(metric_dimension_exact(p7, all_pairs_distances(p7)).dimension == 1);

    auto k14 = fixtures::star(4);
    CHECK(metric_dimension_exact(k14, all_pairs_distances(k14)).dimension == 3);

    auto sp = fixtures::spider222();
    auto dim = metric_dimension_exact(sp, all_pairs_distances(sp));
    CHECK(dim.dimension == 2);
    CHECK(is_resolving_set(all_pairs_distances(sp), dim.witness).resolving);
}

TEST_CASE("size caps and disconnected input") {
    auto big = fixtures::path(13);
    CHECK_THROWS_WITH_AS(partition_dimension_exact(big, all_pairs_distances(big)),
                         doctest::Contains("TooLarge"), Error);
    ExactOptions raised;
    raised.pd_max_n = 13;
    CHECK(partition_dimension_exact(big, all_pairs_distances(big), raised).dimension == 2);

    auto big15 = fixtures::path(15);
    CHECK_THROWS_WITH_AS(metric_dimension_exact(big15, all_pairs_distances(big15)),
                         doctest::Contains("TooLarge"), Error);

    auto lonely = Graph::from_edge_list(3, {{0, 1}});
    DistanceMatrix fake(3);
    CHECK_THROWS_WITH_AS(partition_dimension_exact(lonely, fake),
                         doctest::Contains("Disconnected"), Error);
}

TEST_CASE("trivial graph") {
    auto k1 = Graph::from_edge_list(1, {});
    auto dm = all_pairs_distances(k1);
    CHECK(partition_dimension_exact(k1, dm).dimension == 1);
    CHECK(metric_dimension_exact(k1, dm).dimension == 0);
}

TEST_CASE("every partition representation has exactly one zero") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        auto g = fixtures::random_connected(n, 3, 500 + round);
        auto dm = all_pairs_distances(g);
        auto pd = partition_dimension_exact(g, dm);
        for (int v = 0; v < n; ++v) {
            auto rep = partition_representation(dm, pd.witness, v);
            CHECK(std::count(rep.begin(), rep.end(), 0) == 1);
        }
    }
}

TEST_CASE("splitting a class of a resolving partition keeps it resolving") {
    std::mt19937_64 rng(11);
    int done = 0;
    for (int round = 0; done < 100; ++round) {
        int n = std::uniform_int_distribution<int>(3, 10)(rng);
        auto g = fixtures::random_connected(n, 2, 900 + round);
        auto dm = all_pairs_distances(g);
        auto pd = partition_dimension_exact(g, dm);
        auto pi = pd.witness;
        // find a splittable class
        std::vector<int> fat;
        for (size_t c = 0; c < pi.classes.size(); ++c)
            if (pi.classes[c].size() >= 2) fat.push_back(static_cast<int>(c));
        if (fat.empty()) continue;
        int c = fat[std::uniform_int_distribution<size_t>(0, fat.size() - 1)(rng)];
        auto members = pi.classes[c];
        std::shuffle(members.begin(), members.end(), rng);
        size_t cut = std::uniform_int_distribution<size_t>(1, members.size() - 1)(rng);
        std::vector<int> left(members.begin(), members.begin() + cut);
        std::vector<int> right(members.begin() + cut, members.end());
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        pi.classes[c] = left;
        pi.classes.push_back(right);  // order preserved, new class appended
        CHECK(is_resolving_partition(dm, pi).resolving);
        ++done;
    }
}

TEST_CASE("pd is invariant under relabeling") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 10; ++round) {
        int n = std::uniform_int_distribution<int>(4, 9)(rng);
        auto g = random_tree(n, 300 + round);
        int pd = partition_dimension_exact(g, all_pairs_distances(g)).dimension;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int shuffle_round = 0; shuffle_round < 3; ++shuffle_round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            auto h = fixtures::relabeled(g, perm);
            CHECK(partition_dimension_exact(h, all_pairs_distances(h)).dimension == pd);
        }
    }
}

TEST_CASE("agrees with the dumb assignment-enumeration oracle") {
    for (int n = 2; n <= 6; ++n) {
        all_trees(n, [&](const Graph& g) {
            auto dm = all_pairs_distances(g);
            CHECK(partition_dimension_exact(g, dm).dimension ==
                  pd_by_assignment_enumeration(g, dm));
        });
    }
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        auto g = fixtures::random_connected(6, 4, seed);
        auto dm = all_pairs_distances(g);
        CHECK(partition_dimension_exact(g, dm).dimension == pd_by_assignment_enumeration(g, dm));
    }
}

TEST_CASE("structural lower bounds change nothing") {
    ExactOptions off;
    off.use_structural_bounds = false;
    for (int n = 2; n <= 7; ++n) {
        all_trees(n, [&](const Graph& g) {
            auto dm = all_pairs_distances(g);
            CHECK(partition_dimension_exact(g, dm).dimension ==
                  partition_dimension_exact(g, dm, off).dimension);
        });
    }
}

TEST_CASE("pd <= dim + 1 and pd = 2 iff path, small exhaustive") {
    for (int n = 2; n <= 7; ++n) {
        all_trees(n, [&](const Graph& g) {
            auto dm = all_pairs_distances(g);
            int pd = partition_dimension_exact(g, dm).dimension;
            int dim = metric_dimension_exact(g, dm).dimension;
            CHECK(pd <= dim + 1);
            CHECK((pd == 2) == is_path_graph(g));
        });
    }
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = fixtures::random_connected(8, 5, seed);
        auto dm = all_pairs_distances(g);
        CHECK(partition_dimension_exact(g, dm).dimension <=
              metric_dimension_exact(g, dm).dimension + 1);
    }
}

TEST_CASE("fixed-class-count scans") {
    auto p5 = fixtures::path(5);
    CHECK(exists_resolving_partition(p5, all_pairs_distances(p5), 2));
    auto ds = fixtures::dstar();
    auto dm = all_pairs_distances(ds);
    CHECK(!exists_resolving_partition(ds, dm, 2));
    CHECK(exists_resolving_partition(ds, dm, 3));
    CHECK(exists_resolving_partition(ds, dm, 6));  // singletons
    CHECK(!exists_resolving_partition(ds, dm, 1));
    CHECK(!exists_resolving_partition(ds, dm, 7));
}

TEST_CASE("witness determinism") {
    auto g = fixtures::dstar();
    auto dm = all_pairs_distances(g);
    auto first = partition_dimension_exact(g, dm);
    auto second = partition_dimension_exact(g, dm);
    CHECK(first.witness.classes == second.witness.classes);

    auto p7 = fixtures::path(7);
    auto pd = partition_dimension_exact(p7, all_pairs_distances(p7));
    // first resolving candidate in growth-string order: {0..5 | 6}
    CHECK(pd.witness.classes == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}, {6}});
}

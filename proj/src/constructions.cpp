#include "respart/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace respart {

int thm1_class_count(const TreeAnatomy& anat) {
    return anat.multi_count() + anat.max_terminal_degree - 1;
}

int thm3_class_count(const TreeAnatomy& anat) {
    return std::max(anat.multi_count(), anat.max_terminal_degree + 1);
}

int gentree_class_count(const GenTreeAnatomy& anat) {
    if (anat.max_fan >= 3)
        return anat.support_cut_count() + anat.hub_block_count() + anat.max_fan - 1;
    return anat.support_cut_count() + anat.hub_block_count() + 1;
}

namespace {

VertexPartition finish(const DistanceMatrix& dm, const std::vector<std::set<int>>& classes,
                       const char* what) {
    VertexPartition pi;
    for (const auto& cls : classes) {
        if (cls.empty()) raise(errc::verification_failed, std::string(what) + ": empty class");
        pi.classes.emplace_back(cls.begin(), cls.end());
    }
    validate_partition(dm.size(), pi);  // exact cover
    auto verdict = is_resolving_partition(dm, pi);
    if (!verdict.resolving)
        raise(errc::verification_failed,
              std::string(what) + ": partition does not resolve, vertices " +
                  std::to_string(verdict.witness->first) + " and " +
                  std::to_string(verdict.witness->second) + " collide");
    return pi;
}

// classes keyed by id; id 0 is the ground class holding every unassigned vertex
VertexPartition finish_with_ground(const DistanceMatrix& dm, const std::vector<int>& class_of,
                                   int t, const char* what) {
    std::vector<std::set<int>> classes(t);
    for (int v = 0; v < static_cast<int>(class_of.size()); ++v)
        classes[class_of[v]].insert(v);
    return finish(dm, classes, what);
}

// Leg order used by the branch construction: the longest leg goes last (it
// stays in the ground class when the group attains max_terminal_degree).
const std::vector<int>& thm1_leg(const BranchGroup& grp, int j) {
    int l = grp.terminal_degree();
    return grp.legs[j == l ? 0 : j];
}

std::vector<int> tree_path(const Graph& g, const DistanceMatrix& dm, int a, int b) {
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        for (int nb : g.neighbors(cur))
            if (dm.at(nb, b) == dm.at(cur, b) - 1) { cur = nb; break; }
        path.push_back(cur);
    }
    return path;
}

}  // namespace

VertexPartition construct_path(const Graph& g, const DistanceMatrix& dm) {
    if (!is_path_graph(g) || g.vertex_count() < 2)
        raise(errc::not_a_path, "needs a path of order >= 2");
    int endpoint = -1;
    for (int v = 0; v < g.vertex_count() && endpoint < 0; ++v)
        if (g.degree(v) == 1) endpoint = v;
    std::vector<std::set<int>> classes(2);
    classes[0].insert(endpoint);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != endpoint) classes[1].insert(v);
    return finish(dm, classes, "path construction");
}

VertexPartition construct_star(const Graph& g, const DistanceMatrix& dm) {
    if (!is_star_graph(g)) raise(errc::not_a_star, "needs a star of order >= 3");
    int n = g.vertex_count();
    int center = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) center = v;
    std::vector<std::set<int>> classes;
    classes.push_back({center});
    bool center_paired = false;
    for (int v = 0; v < n; ++v) {
        if (v == center) continue;
        if (!center_paired) {
            classes[0].insert(v);  // first leaf shares the center's class
            center_paired = true;
        } else {
            classes.push_back({v});
        }
    }
    return finish(dm, classes, "star construction");
}

VertexPartition construct_thm1(const Graph& g, const DistanceMatrix& dm,
                               const TreeAnatomy& anat) {
    if (!is_tree(g)) raise(errc::not_a_tree, "branch construction needs a tree");
    if (is_path_graph(g)) raise(errc::is_a_path, "branch construction is undefined on paths");

    int kappa = anat.multi_count();
    int tau = anat.max_terminal_degree;
    int t = thm1_class_count(anat);
    // class ids: 0 ground, 1..kappa first legs, kappa+1..t-1 pooled legs by index
    std::vector<int> class_of(g.vertex_count(), 0);
    for (int i = 1; i <= kappa; ++i) {
        const BranchGroup& grp = anat.exterior[anat.multi[i - 1]];
        for (int j = 1; j <= grp.terminal_degree(); ++j) {
            int cls = 0;
            if (j == 1)
                cls = i;
            else if (j <= tau - 1)
                cls = kappa + j - 1;
            for (int v : thm1_leg(grp, j)) class_of[v] = cls;
        }
    }
    return finish_with_ground(dm, class_of, t, "branch construction");
}

VertexPartition construct_spider(const Graph& g, const DistanceMatrix& dm,
                                 const TreeAnatomy& anat) {
    if (!is_tree(g) || anat.exterior_count() != 1)
        raise(errc::not_a_spider, "needs a tree with exactly one exterior branch vertex");
    if (is_star_graph(g)) raise(errc::is_a_star, "stars take the star construction");
    int t = anat.leaf_count();
    if (t < 4) raise(errc::too_few_leaves, "needs at least 4 leaves, got " + std::to_string(t));

    const BranchGroup& grp = anat.exterior[0];
    if (grp.terminal_degree() != t || grp.legs[0].size() < 2)
        raise(errc::verification_failed, "spider anatomy is inconsistent");

    // terminals[0] is a farthest leaf; its leg loses its first vertex to the
    // second class and carries the rest into the first
    std::vector<std::set<int>> classes(t - 1);
    classes[0].insert(grp.legs[1].begin(), grp.legs[1].end());
    classes[0].insert(grp.legs[0].begin() + 1, grp.legs[0].end());
    classes[1].insert(grp.legs[2].begin(), grp.legs[2].end());
    classes[1].insert(grp.legs[0][0]);
    for (int i = 3; i <= t - 2; ++i) classes[i - 1].insert(grp.terminals[i]);
    std::set<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v) rest.insert(v);
    for (int i = 0; i + 1 < t - 1; ++i)
        for (int v : classes[i]) rest.erase(v);
    classes[t - 2] = std::move(rest);
    return finish(dm, classes, "spider construction");
}

bool thm3_precondition(const Graph& g, const DistanceMatrix& dm, const TreeAnatomy& anat) {
    if (!is_tree(g)) raise(errc::not_a_tree, "condition is defined for trees");
    std::vector<char> core(g.vertex_count(), 0);
    std::vector<int> members;
    for (int idx : anat.multi) {
        core[anat.exterior[idx].vertex] = 1;
        members.push_back(anat.exterior[idx].vertex);
    }
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            for (int v : tree_path(g, dm, members[a], members[b]))
                if (!core[v]) return false;
    return true;
}

VertexPartition construct_thm3(const Graph& g, const DistanceMatrix& dm,
                               const TreeAnatomy& anat) {
    if (!thm3_precondition(g, dm, anat))
        raise(errc::precondition_violated,
              "a vertex between two multi-terminal branch vertices is not one itself");

    int kappa = anat.multi_count();
    int t = thm3_class_count(anat);
    std::vector<int> class_of(g.vertex_count(), -1);
    for (int i = 1; i <= kappa; ++i) class_of[anat.exterior[anat.multi[i - 1]].vertex] = i - 1;
    for (int j = 1; j <= kappa; ++j) {
        const BranchGroup& grp = anat.exterior[anat.multi[j - 1]];
        // legs (longest first) take the smallest class indices other than j
        int cls = 1;
        for (const auto& leg : grp.legs) {
            if (cls == j) ++cls;
            for (int v : leg) {
                if (class_of[v] >= 0)
                    raise(errc::verification_failed, "legs overlap in core construction");
                class_of[v] = cls - 1;
            }
            ++cls;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (class_of[v] < 0)
            raise(errc::precondition_violated,
                  "classes do not cover V: vertex " + std::to_string(v) + " is unassigned");

    std::vector<std::set<int>> classes(t);
    for (int v = 0; v < g.vertex_count(); ++v) classes[class_of[v]].insert(v);
    return finish(dm, classes, "core construction");
}

VertexPartition construct_gentree(const Graph& g, const DistanceMatrix& dm,
                                  const GenTreeAnatomy& anat) {
    auto verdict = classify_generalized_tree(g);
    if (verdict != gen_tree_verdict::ok)
        raise(errc::not_generalized_tree, gen_tree_verdict_name(verdict));

    int zeta = anat.support_cut_count();
    int vth = anat.hub_block_count();
    int phi = anat.max_fan;
    int t = gentree_class_count(anat);
    // class ids: 0 ground, 1..zeta support singletons, zeta+1..zeta+vth hub
    // singletons, then pooled fan positions 2..phi-1 when phi >= 3
    std::vector<int> class_of(g.vertex_count(), 0);
    auto place = [&](const std::vector<int>& extremes, int first_class) {
        class_of[extremes[0]] = first_class;
        if (phi < 3) return;
        for (int j = 2; j <= std::min<int>(phi - 1, extremes.size()); ++j)
            class_of[extremes[j - 1]] = zeta + vth + j - 1;
    };
    for (int i = 0; i < zeta; ++i) place(anat.support_cuts[i].outer_extremes, 1 + i);
    for (int j = 0; j < vth; ++j) place(anat.hub_blocks[j].extremes, 1 + zeta + j);
    return finish_with_ground(dm, class_of, t, "generalized-tree construction");
}

}  // namespace respart

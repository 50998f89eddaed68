#include "respart/anatomy.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace respart {

SupportStats support_stats(const Graph& g) {
    int n = g.vertex_count();
    SupportStats st;
    for (int v = 0; v < n; ++v) {
        int adjacent_leaves = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) == 1) ++adjacent_leaves;
        if (adjacent_leaves == 0) continue;
        st.supports.push_back(v);
        if (adjacent_leaves > st.max_support_leaves) {
            st.max_support_leaves = adjacent_leaves;
            st.busiest_support = v;
        }
    }
    return st;
}

TreeAnatomy tree_anatomy(const Graph& g, const DistanceMatrix& dm) {
    if (!is_tree(g)) raise(errc::not_a_tree, "anatomy is defined for trees");
    if (is_path_graph(g)) raise(errc::is_a_path, "a path has no branch vertex");

    int n = g.vertex_count();
    TreeAnatomy anat;
    anat.nearest_branch.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) anat.leaves.push_back(v);
        if (g.degree(v) >= 3) anat.branch_vertices.push_back(v);
    }

    // Strict-inequality terminal assignment. A tie is impossible in a tree:
    // the first branch vertex on the walk from a leaf is strictly nearer than
    // any other, so we treat a tie as an internal error.
    std::map<int, std::vector<int>> terminals_of;
    for (int leaf : anat.leaves) {
        int best = -1;
        bool strict = true;
        for (int b : anat.branch_vertices) {
            if (best < 0 || dm.at(leaf, b) < dm.at(leaf, best)) {
                best = b;
                strict = true;
            } else if (dm.at(leaf, b) == dm.at(leaf, best)) {
                strict = false;
            }
        }
        if (best < 0 || !strict)
            raise(errc::verification_failed,
                  "leaf " + std::to_string(leaf) + " has no unique nearest branch vertex");
        anat.nearest_branch[leaf] = best;
        terminals_of[best].push_back(leaf);
    }

    for (auto& [vertex, terms] : terminals_of) {
        BranchGroup group;
        group.vertex = vertex;
        // longest leg first, ties by ascending leaf id
        std::sort(terms.begin(), terms.end(), [&](int a, int b) {
            if (dm.at(vertex, a) != dm.at(vertex, b)) return dm.at(vertex, a) > dm.at(vertex, b);
            return a < b;
        });
        group.terminals = terms;
        for (int leaf : terms) {
            // walk leaf -> vertex, then store the leg outward from vertex
            std::vector<int> leg;
            int cur = leaf;
            while (cur != vertex) {
                leg.push_back(cur);
                int next = -1;
                for (int nb : g.neighbors(cur))
                    if (dm.at(nb, vertex) == dm.at(cur, vertex) - 1) { next = nb; break; }
                cur = next;
            }
            std::reverse(leg.begin(), leg.end());
            group.legs.push_back(std::move(leg));
        }
        anat.exterior.push_back(std::move(group));
    }

    for (size_t i = 0; i < anat.exterior.size(); ++i) {
        if (anat.exterior[i].terminal_degree() >= 2) {
            anat.multi.push_back(static_cast<int>(i));
            anat.max_terminal_degree =
                std::max(anat.max_terminal_degree, anat.exterior[i].terminal_degree());
        }
    }

    auto st = support_stats(g);
    anat.supports = std::move(st.supports);
    anat.max_support_leaves = st.max_support_leaves;
    anat.busiest_support = st.busiest_support;
    return anat;
}

GenTreeAnatomy gen_tree_anatomy(const Graph& g, const BlockDecomposition& bd) {
    auto verdict = classify_generalized_tree(g, bd);
    if (verdict != gen_tree_verdict::ok)
        raise(errc::not_generalized_tree, gen_tree_verdict_name(verdict));

    int n = g.vertex_count();
    std::vector<char> is_cut(n, 0), is_extreme(n, 0);
    for (int v : bd.cut_vertices) is_cut[v] = 1;
    for (int v : bd.extreme_vertices) is_extreme[v] = 1;

    GenTreeAnatomy anat;
    std::map<int, std::vector<int>> outer;  // support cut vertex -> its outer extremes
    for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        const auto& block = bd.blocks[bi];
        std::vector<int> cuts, extremes;
        for (int v : block) (is_cut[v] ? cuts : extremes).push_back(v);
        if (cuts.size() == 1) {
            auto& list = outer[cuts[0]];
            list.insert(list.end(), extremes.begin(), extremes.end());
        }
        if (cuts.size() >= 2 && extremes.size() >= 2) {
            HubBlock hub;
            hub.block_index = static_cast<int>(bi);
            hub.extremes = extremes;  // block vertices are sorted already
            anat.hub_blocks.push_back(std::move(hub));
        }
    }
    for (auto& [vertex, extremes] : outer) {
        std::sort(extremes.begin(), extremes.end());
        anat.support_cuts.push_back({vertex, std::move(extremes)});
    }
    for (const auto& sc : anat.support_cuts)
        anat.max_fan = std::max(anat.max_fan, static_cast<int>(sc.outer_extremes.size()));
    for (const auto& hb : anat.hub_blocks)
        anat.max_fan = std::max(anat.max_fan, static_cast<int>(hb.extremes.size()));
    return anat;
}

}  // namespace respart

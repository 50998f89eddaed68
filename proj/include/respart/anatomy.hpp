#pragma once

#include <vector>

#include "respart/graph.hpp"

namespace respart {

/// A branch vertex (degree >= 3) together with the leaves that are strictly
/// nearest to it and the legs leading to them.
struct BranchGroup {
    int vertex = -1;
    std::vector<int> terminals;             // longest leg first, ties by ascending leaf id
    std::vector<std::vector<int>> legs;     // legs[i]: path from vertex (excluded) out to terminals[i]

    int terminal_degree() const { return static_cast<int>(terminals.size()); }
};

struct TreeAnatomy {
    std::vector<int> leaves;
    std::vector<int> branch_vertices;       // degree >= 3, ascending
    std::vector<int> nearest_branch;        // per vertex: owning branch vertex for leaves, else -1
    std::vector<BranchGroup> exterior;      // branch vertices with >= 1 terminal, ascending id
    std::vector<int> multi;                 // indices into exterior with terminal degree >= 2
    int max_terminal_degree = 0;            // over multi-terminal groups
    std::vector<int> supports;              // vertices adjacent to at least one leaf, ascending
    int max_support_leaves = 0;             // most leaves adjacent to a single support
    int busiest_support = -1;               // least-id support achieving max_support_leaves

    int leaf_count() const { return static_cast<int>(leaves.size()); }
    int exterior_count() const { return static_cast<int>(exterior.size()); }
    int multi_count() const { return static_cast<int>(multi.size()); }
    int support_count() const { return static_cast<int>(supports.size()); }
};

struct SupportCut {
    int vertex = -1;                         // the only cut vertex of at least one block
    std::vector<int> outer_extremes;         // extremes adjacent to exactly this cut vertex, ascending
};

/// Block with at least two cut vertices that still carries at least two
/// extreme vertices of its own.
struct HubBlock {
    int block_index = -1;                    // into BlockDecomposition::blocks
    std::vector<int> extremes;               // ascending
};

struct GenTreeAnatomy {
    std::vector<SupportCut> support_cuts;
    std::vector<HubBlock> hub_blocks;
    int max_fan = 0;                         // largest outer-extreme / hub-extreme group

    int support_cut_count() const { return static_cast<int>(support_cuts.size()); }
    int hub_block_count() const { return static_cast<int>(hub_blocks.size()); }
};

struct SupportStats {
    std::vector<int> supports;
    int max_support_leaves = 0;
    int busiest_support = -1;
};

/// Support/leaf counts by the literal definition; valid for every tree
/// (paths included, where the full anatomy is undefined).
SupportStats support_stats(const Graph& g);

/// Throws errc::not_a_tree / errc::is_a_path; paths have no branch vertex.
TreeAnatomy tree_anatomy(const Graph& g, const DistanceMatrix& dm);

/// Throws errc::not_generalized_tree.
GenTreeAnatomy gen_tree_anatomy(const Graph& g, const BlockDecomposition& bd);

}  // namespace respart

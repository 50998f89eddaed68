#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "respart/graph.hpp"
#include "respart/resolver.hpp"

namespace respart {

struct BuildStep {
    int block_size = 2;
    int attach = -1;  // vertex of the graph built so far; -1 only for the first step
};

/// Recipe for gluing complete graphs at single vertices.
struct BuildSequence {
    std::vector<BuildStep> steps;
};

std::string to_string(const BuildSequence& seq);

/// Throws errc::invalid_range on bad sizes or attach ids.
Graph gen_tree_from_build(const BuildSequence& seq);

/// Standard bijection; n = seq.size() + 2.
Graph tree_from_prufer(const std::vector<int>& seq);
std::vector<int> prufer_from_tree(const Graph& g);

/// All n^(n-2) labeled trees, 2 <= n <= 9; rank enumerates the sequence as a
/// base-n number, most significant digit first.
uint64_t labeled_tree_count(int n);
Graph tree_from_rank(int n, uint64_t rank);
void all_trees(int n, const std::function<void(const Graph&)>& visit);

Graph random_tree(int n, uint64_t seed);

struct GenTreeParams {
    int min_blocks = 2;
    int max_blocks = 6;
    int min_block_size = 2;
    int max_block_size = 5;
    int max_vertices = 0;  // 0: unlimited
};

struct RandomGenTree {
    Graph graph;
    BuildSequence build;
};

RandomGenTree random_generalized_tree(const GenTreeParams& params, uint64_t seed);

struct SweepViolation {
    std::string instance;
    std::string check;
    std::string detail;
};

struct SweepResult {
    uint64_t instances = 0;
    std::vector<SweepViolation> violations;

    bool passed() const { return violations.empty(); }
};

struct TreeSweepParams {
    int min_n = 2;
    int max_n = 8;
    uint64_t rank_begin = 0;          // applied per n, for sharding
    uint64_t rank_end = UINT64_MAX;   // exclusive
    int pd_max_n = 8;                 // exact pd only when n <= this
    int dim_max_n = 9;
    bool check_constructions = true;
    bool check_gen_tree_view = true;  // support-cut/fan counts match the tree's
    // when the pd search is skipped, still certify "two classes resolve iff
    // path" by scanning the two-class partitions
    bool check_two_class_rule = true;
    // test-only hook: shifts one named bound before checking it
    std::string fault_bound;
    int fault_offset = 0;
};

struct GenTreeSweepParams {
    uint64_t seed_begin = 1;
    uint64_t seed_end = 201;  // exclusive
    GenTreeParams shape{2, 6, 2, 5, 12};
    int pd_max_n = 12;
    int dim_max_n = 12;
    std::string fault_bound;
    int fault_offset = 0;
};

using ProgressFn = std::function<void(uint64_t done, uint64_t total)>;

/// Runs the bound report plus construction checks on every instance; errors
/// become violations, the sweep never aborts early.
SweepResult sweep_trees(const TreeSweepParams& params, const ProgressFn& progress = {});
SweepResult sweep_gen_trees(const GenTreeSweepParams& params, const ProgressFn& progress = {});

}  // namespace respart

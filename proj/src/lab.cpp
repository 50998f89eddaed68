#include "respart/lab.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "respart/anatomy.hpp"
#include "respart/bounds.hpp"
#include "respart/constructions.hpp"

namespace respart {

std::string to_string(const BuildSequence& seq) {
    std::ostringstream out;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        if (i) out << ";";
        out << "K" << seq.steps[i].block_size;
        if (seq.steps[i].attach >= 0) out << "@" << seq.steps[i].attach;
    }
    return out.str();
}

Graph gen_tree_from_build(const BuildSequence& seq) {
    if (seq.steps.empty()) raise(errc::invalid_range, "build sequence is empty");
    int count = 0;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& step = seq.steps[i];
        if (step.block_size < 2)
            raise(errc::invalid_range, "block size must be >= 2, got " +
                                           std::to_string(step.block_size));
        std::vector<int> members;
        if (i == 0) {
            for (int v = 0; v < step.block_size; ++v) members.push_back(count++);
        } else {
            if (step.attach < 0 || step.attach >= count)
                raise(errc::invalid_range,
                      "attach vertex " + std::to_string(step.attach) + " not built yet");
            members.push_back(step.attach);
            for (int v = 1; v < step.block_size; ++v) members.push_back(count++);
        }
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                edges.emplace_back(members[a], members[b]);
    }
    return Graph::from_edge_list(count, edges);
}

Graph tree_from_prufer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    for (int s : seq)
        if (s < 0 || s >= n)
            raise(errc::out_of_range, "sequence entry " + std::to_string(s) + " outside 0.." +
                                          std::to_string(n - 1));
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph::from_edge_list(n, edges);
}

std::vector<int> prufer_from_tree(const Graph& g) {
    int n = g.vertex_count();
    if (!is_tree(g)) raise(errc::not_a_tree, "encoding needs a tree");
    std::vector<int> degree(n), seq;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    for (int round = 0; round < n - 2; ++round) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (!removed[v] && degree[v] == 1) leaf = v;
        int parent = -1;
        for (int u : g.neighbors(leaf))
            if (!removed[u]) parent = u;
        seq.push_back(parent);
        removed[leaf] = 1;
        --degree[parent];
    }
    return seq;
}

uint64_t labeled_tree_count(int n) {
    if (n < 2 || n > 9) raise(errc::too_large, "labeled enumeration supports 2 <= n <= 9");
    uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<uint64_t>(n);
    return count;
}

Graph tree_from_rank(int n, uint64_t rank) {
    uint64_t total = labeled_tree_count(n);
    if (rank >= total) raise(errc::out_of_range, "rank beyond enumeration");
    std::vector<int> seq(n - 2);
    for (int i = n - 3; i >= 0; --i) {
        seq[i] = static_cast<int>(rank % n);
        rank /= n;
    }
    return tree_from_prufer(seq);
}

void all_trees(int n, const std::function<void(const Graph&)>& visit) {
    uint64_t total = labeled_tree_count(n);
    for (uint64_t rank = 0; rank < total; ++rank) visit(tree_from_rank(n, rank));
}

Graph random_tree(int n, uint64_t seed) {
    if (n < 1) raise(errc::invalid_range, "need n >= 1");
    if (n == 1) return Graph::from_edge_list(1, {});
    if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = pick(rng);
    return tree_from_prufer(seq);
}

RandomGenTree random_generalized_tree(const GenTreeParams& params, uint64_t seed) {
    if (params.min_blocks < 2)
        raise(errc::invalid_range, "a generalized tree needs at least 2 blocks");
    if (params.max_blocks < params.min_blocks || params.max_block_size < params.min_block_size ||
        params.min_block_size < 2)
        raise(errc::invalid_range, "bad block ranges");
    if (params.max_vertices > 0 && params.max_vertices < 2 * params.min_block_size - 1)
        raise(errc::invalid_range, "vertex budget cannot fit two blocks");

    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    int target = pick(params.min_blocks, params.max_blocks);
    BuildSequence seq;
    int first_cap = params.max_block_size;
    if (params.max_vertices > 0)
        first_cap = std::min(first_cap, params.max_vertices - (params.min_block_size - 1));
    int count = pick(params.min_block_size, first_cap);
    seq.steps.push_back({count, -1});
    for (int b = 1; b < target; ++b) {
        int cap = params.max_block_size;
        if (params.max_vertices > 0) cap = std::min(cap, params.max_vertices - count + 1);
        if (cap < params.min_block_size) break;  // budget spent; >=2 blocks hold by validation
        int size = pick(params.min_block_size, cap);
        int attach = pick(0, count - 1);
        seq.steps.push_back({size, attach});
        count += size - 1;
    }
    return {gen_tree_from_build(seq), seq};
}

namespace {

std::string fmt_exact(const BoundsReport& report) {
    std::string out;
    if (report.exact_pd) out += " pd=" + std::to_string(*report.exact_pd);
    if (report.exact_dim) out += " dim=" + std::to_string(*report.exact_dim);
    return out;
}

void check_report(const BoundsReport& report, const std::string& fault_bound, int fault_offset,
                  const std::string& label, SweepResult& result) {
    for (const auto& e : report.entries) {
        std::optional<bool> satisfied = e.satisfied;
        std::optional<int> value = e.value;
        if (e.name == fault_bound && e.applicable && value &&
            e.kind != bound_kind::characterization) {
            value = *value + fault_offset;
            const auto& exact =
                e.name == "dim_eq_leaves_minus_exterior" ? report.exact_dim : report.exact_pd;
            if (exact) {
                switch (e.kind) {
                    case bound_kind::upper: satisfied = *exact <= *value; break;
                    case bound_kind::lower: satisfied = *exact >= *value; break;
                    default: satisfied = *exact == *value; break;
                }
            }
        }
        if (satisfied && !*satisfied)
            result.violations.push_back(
                {label, e.name,
                 "value=" + (value ? std::to_string(*value) : "-") + fmt_exact(report)});
    }
}

void check_tree_constructions(const Graph& g, const DistanceMatrix& dm, const TreeAnatomy& anat,
                              const std::optional<int>& exact_pd, const std::string& label,
                              SweepResult& result) {
    auto check_one = [&](const char* name, int expected_classes, auto&& build) {
        try {
            VertexPartition pi = build();
            if (pi.class_count() != expected_classes)
                result.violations.push_back({label, name,
                                             "got " + std::to_string(pi.class_count()) +
                                                 " classes, expected " +
                                                 std::to_string(expected_classes)});
            else if (exact_pd && *exact_pd > pi.class_count())
                result.violations.push_back(
                    {label, name, "pd " + std::to_string(*exact_pd) + " exceeds class count"});
        } catch (const Error& err) {
            result.violations.push_back({label, name, err.what()});
        }
    };
    check_one("construct_thm1", thm1_class_count(anat),
              [&] { return construct_thm1(g, dm, anat); });
    if (thm3_precondition(g, dm, anat))
        check_one("construct_thm3", thm3_class_count(anat),
                  [&] { return construct_thm3(g, dm, anat); });
    if (anat.exterior_count() == 1 && anat.leaf_count() >= 4 && !is_star_graph(g))
        check_one("construct_spider", anat.leaf_count() - 1,
                  [&] { return construct_spider(g, dm, anat); });
}

// Trees seen through the generalized-tree lens: support cut vertices are the
// supports, the fan is the support-leaf maximum, and no hub blocks exist.
void check_gen_tree_view(const Graph& g, const std::string& label, SweepResult& result) {
    auto bd = block_decomposition(g);
    if (classify_generalized_tree(g, bd) != gen_tree_verdict::ok) {
        result.violations.push_back({label, "gen_tree_view", "tree not recognized"});
        return;
    }
    auto ganat = gen_tree_anatomy(g, bd);
    auto st = support_stats(g);
    if (ganat.support_cut_count() != static_cast<int>(st.supports.size()) ||
        ganat.max_fan != st.max_support_leaves || ganat.hub_block_count() != 0)
        result.violations.push_back(
            {label, "gen_tree_view",
             "support cuts=" + std::to_string(ganat.support_cut_count()) + " fan=" +
                 std::to_string(ganat.max_fan) + " hubs=" +
                 std::to_string(ganat.hub_block_count()) + " vs supports=" +
                 std::to_string(st.supports.size()) + " theta=" +
                 std::to_string(st.max_support_leaves)});
}

std::string prufer_label(int n, const std::vector<int>& seq) {
    std::string label = "tree n=" + std::to_string(n) + " prufer=";
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) label += ",";
        label += std::to_string(seq[i]);
    }
    return label;
}

}  // namespace

SweepResult sweep_trees(const TreeSweepParams& params, const ProgressFn& progress) {
    SweepResult result;
    uint64_t total = 0;
    for (int n = params.min_n; n <= params.max_n; ++n)
        total += std::min(labeled_tree_count(n), params.rank_end) -
                 std::min(labeled_tree_count(n), params.rank_begin);

    std::vector<int> seq;
    for (int n = params.min_n; n <= params.max_n; ++n) {
        uint64_t end = std::min(labeled_tree_count(n), params.rank_end);
        for (uint64_t rank = params.rank_begin; rank < end; ++rank) {
            seq.assign(n - 2, 0);
            uint64_t r = rank;
            for (int i = n - 3; i >= 0; --i) {
                seq[i] = static_cast<int>(r % n);
                r /= n;
            }
            Graph g = tree_from_prufer(seq);
            std::string label = prufer_label(n, seq);
            try {
                ReportOptions ro;
                ro.compute_exact = true;
                ro.exact.pd_max_n = params.pd_max_n;
                ro.exact.dim_max_n = params.dim_max_n;
                ro.exact.use_structural_bounds = false;  // keep the checks non-circular
                auto report = bounds_report(g, ro);
                check_report(report, params.fault_bound, params.fault_offset, label, result);
                if (params.check_constructions && !is_path_graph(g)) {
                    auto dm = all_pairs_distances(g);
                    auto anat = tree_anatomy(g, dm);
                    check_tree_constructions(g, dm, anat, report.exact_pd, label, result);
                }
                if (params.check_gen_tree_view && n >= 3)
                    check_gen_tree_view(g, label, result);
                if (params.check_two_class_rule && !report.exact_pd && n >= 2 && n <= 16) {
                    auto dm = all_pairs_distances(g);
                    if (exists_resolving_partition(g, dm, 2) != is_path_graph(g))
                        result.violations.push_back(
                            {label, "path_characterization", "two-class scan"});
                }
            } catch (const Error& err) {
                result.violations.push_back({label, "exception", err.what()});
            }
            ++result.instances;
            if (progress && (result.instances & 0xFFF) == 0) progress(result.instances, total);
        }
    }
    if (progress) progress(result.instances, total);
    return result;
}

SweepResult sweep_gen_trees(const GenTreeSweepParams& params, const ProgressFn& progress) {
    SweepResult result;
    uint64_t total = params.seed_end - params.seed_begin;
    for (uint64_t seed = params.seed_begin; seed < params.seed_end; ++seed) {
        auto made = random_generalized_tree(params.shape, seed);
        std::string label =
            "gentree seed=" + std::to_string(seed) + " build=" + to_string(made.build);
        try {
            const Graph& g = made.graph;
            auto bd = block_decomposition(g);
            if (classify_generalized_tree(g, bd) != gen_tree_verdict::ok)
                raise(errc::not_generalized_tree, "generator output fails the recognizer");
            ReportOptions ro;
            ro.compute_exact = true;
            ro.exact.pd_max_n = params.pd_max_n;
            ro.exact.dim_max_n = params.dim_max_n;
            ro.exact.use_structural_bounds = false;
            auto report = bounds_report(g, ro);
            check_report(report, params.fault_bound, params.fault_offset, label, result);

            auto dm = all_pairs_distances(g);
            auto ganat = gen_tree_anatomy(g, bd);
            try {
                auto pi = construct_gentree(g, dm, ganat);
                if (pi.class_count() != gentree_class_count(ganat))
                    result.violations.push_back(
                        {label, "construct_gentree",
                         "got " + std::to_string(pi.class_count()) + " classes, expected " +
                             std::to_string(gentree_class_count(ganat))});
                else if (report.exact_pd && *report.exact_pd > pi.class_count())
                    result.violations.push_back({label, "construct_gentree",
                                                 "pd " + std::to_string(*report.exact_pd) +
                                                     " exceeds class count"});
            } catch (const Error& err) {
                result.violations.push_back({label, "construct_gentree", err.what()});
            }
            if (is_tree(g)) check_gen_tree_view(g, label, result);
        } catch (const Error& err) {
            result.violations.push_back({label, "exception", err.what()});
        }
        ++result.instances;
        if (progress && (result.instances & 0x1F) == 0) progress(result.instances, total);
    }
    if (progress) progress(result.instances, total);
    return result;
}

}  // namespace respart

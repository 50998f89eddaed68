#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "respart/anatomy.hpp"
#include "respart/bounds.hpp"
#include "respart/constructions.hpp"
#include "respart/io.hpp"
#include "respart/lab.hpp"
#include "respart/resolver.hpp"

using namespace respart;

namespace {

int exit_code_for(errc code) {
    switch (code) {
        case errc::precondition_violated:
        case errc::not_a_tree:
        case errc::is_a_path:
        case errc::not_a_path:
        case errc::not_a_star:
        case errc::is_a_star:
        case errc::not_a_spider:
        case errc::too_few_leaves:
        case errc::not_generalized_tree:
            return 3;
        case errc::verification_failed:
            return 1;
        default:
            return 2;  // parse or user error
    }
}

void apply_exact_limit(ExactOptions& opts, std::optional<int> flag_limit) {
    if (const char* env = std::getenv("RESPART_EXACT_LIMIT")) flag_limit = std::atoi(env);
    if (flag_limit) {
        opts.pd_max_n = *flag_limit;
        opts.dim_max_n = *flag_limit;
    }
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) raise(errc::parse_error, *path + ": cannot open for writing");
    out << text;
}

std::string describe_classes(const VertexPartition& pi) {
    std::string out = "{";
    for (size_t c = 0; c < pi.classes.size(); ++c) {
        out += c ? " | " : "";
        for (size_t i = 0; i < pi.classes[c].size(); ++i)
            out += (i ? "," : "") + std::to_string(pi.classes[c][i]);
    }
    return out + "}";
}

int cmd_analyze(const std::string& input, bool exact, bool json, std::optional<int> limit) {
    Graph g = io::read_graph_file(input);
    ReportOptions ro;
    ro.compute_exact = exact;
    apply_exact_limit(ro.exact, limit);
    if (exact && g.vertex_count() > std::max(ro.exact.pd_max_n, ro.exact.dim_max_n))
        raise(errc::too_large, "n=" + std::to_string(g.vertex_count()) +
                                   " exceeds the exact-search cap; raise RESPART_EXACT_LIMIT");
    auto report = bounds_report(g, ro);

    auto j = io::report_json(g, report);
    if (report.exact_pd) {
        j["pd_source"] = "search";
    } else if (is_path_graph(g) && g.vertex_count() >= 2) {
        j["pd"] = 2;  // paths are settled without search
        j["pd_source"] = "path_rule";
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    std::cout << "classification:";
    for (const char* key : {"tree", "path", "star", "generalized_tree"})
        if (j["classification"][key].get<bool>()) std::cout << " " << key;
    std::cout << "\n";
    if (j.contains("tree_anatomy")) {
        const auto& a = j["tree_anatomy"];
        std::cout << "leaves: " << a["leaves"].dump()
                  << "  branch vertices: " << a["branch_vertices"].dump() << "\n";
        std::cout << "exterior groups: " << a["exterior"].dump() << "\n";
        std::cout << "multi-terminal count: " << a["multi_terminal_count"]
                  << "  max terminal degree: " << a["max_terminal_degree"] << "\n";
        std::cout << "supports: " << a["supports"].dump()
                  << "  max leaves per support: " << a["max_support_leaves"] << "\n";
    }
    if (j.contains("gen_tree_anatomy")) {
        const auto& a = j["gen_tree_anatomy"];
        std::cout << "support cuts: " << a["support_cuts"].dump()
                  << "  hub blocks: " << a["hub_blocks"].dump() << "  max fan: " << a["max_fan"]
                  << "\n";
    }
    std::cout << "bounds:\n";
    for (const auto& e : report.entries) {
        std::printf("  %-36s %-16s", e.name.c_str(), bound_kind_name(e.kind));
        if (!e.applicable) {
            std::printf(" not applicable\n");
            continue;
        }
        if (e.value) std::printf(" value=%d", *e.value);
        if (e.satisfied) std::printf(" %s", *e.satisfied ? "satisfied" : "VIOLATED");
        if (e.tight && *e.tight) std::printf(" tight");
        std::printf("\n");
    }
    if (j.contains("pd")) {
        std::cout << "pd = " << j["pd"] << " (" << j["pd_source"].get<std::string>() << ")";
        if (report.pd_witness) std::cout << "  witness " << describe_classes(*report.pd_witness);
        std::cout << "\n";
    }
    if (report.exact_dim) {
        std::cout << "dim = " << *report.exact_dim << "  witness " << j["dim_witness"].dump()
                  << "\n";
    }
    if (report.theta_certificate)
        std::cout << "support vertex attaining the leaf maximum: " << *report.theta_certificate
                  << "\n";
    return 0;
}

struct Construction {
    VertexPartition pi;
    std::string method;
    std::string guarantee;
};

Construction run_method(const Graph& g, const DistanceMatrix& dm, const std::string& method) {
    if (method == "path")
        return {construct_path(g, dm), "path", "pd of a path = 2"};
    if (method == "star")
        return {construct_star(g, dm), "star", "pd_le_leaf_count"};
    if (method == "gentree") {
        auto verdict = classify_generalized_tree(g);
        if (verdict != gen_tree_verdict::ok)
            raise(errc::not_generalized_tree, gen_tree_verdict_name(verdict));
        auto ganat = gen_tree_anatomy(g, block_decomposition(g));
        return {construct_gentree(g, dm, ganat), "gentree", "gen_tree_bound"};
    }

    if (!is_tree(g)) raise(errc::not_a_tree, "method '" + method + "' needs a tree");
    if (method == "thm3" && is_path_graph(g))  // paths fall back to the 2-class construction
        return {construct_path(g, dm), "thm3 (path fallback)", "pd of a path = 2"};
    if (is_path_graph(g))
        raise(errc::is_a_path, "method '" + method + "' needs a tree which is not a path");
    auto anat = tree_anatomy(g, dm);
    if (method == "thm1")
        return {construct_thm1(g, dm, anat), "thm1", "pd_le_branch_bound"};
    if (method == "thm3")
        return {construct_thm3(g, dm, anat), "thm3", "pd_le_core_bound"};
    if (method == "spider")
        return {construct_spider(g, dm, anat), "spider", "leaf_count - 1 (star argument)"};
    raise(errc::parse_error, "unknown method '" + method + "'");
}

Construction run_auto(const Graph& g, const DistanceMatrix& dm) {
    if (is_path_graph(g) && g.vertex_count() >= 2) return run_method(g, dm, "path");
    if (is_star_graph(g)) return run_method(g, dm, "star");
    if (is_tree(g)) {
        auto anat = tree_anatomy(g, dm);
        std::string best = "thm1";
        int best_count = thm1_class_count(anat);
        if (thm3_precondition(g, dm, anat) && thm3_class_count(anat) < best_count) {
            best = "thm3";
            best_count = thm3_class_count(anat);
        }
        if (anat.exterior_count() == 1 && anat.leaf_count() >= 4 &&
            anat.leaf_count() - 1 < best_count)
            best = "spider";
        return run_method(g, dm, best);
    }
    if (is_generalized_tree(g)) return run_method(g, dm, "gentree");
    raise(errc::precondition_violated,
          "no construction applies: input is neither a tree nor a generalized tree");
}

int cmd_construct(const std::string& input, const std::string& method,
                  const std::optional<std::string>& out_path) {
    Graph g = io::read_graph_file(input);
    auto dm = all_pairs_distances(g);
    Construction made = method == "auto" ? run_auto(g, dm) : run_method(g, dm, method);
    std::cerr << "method=" << made.method << " classes=" << made.pi.class_count()
              << " guarantee=" << made.guarantee << "\n";
    write_output(out_path, io::partition_text(made.pi));
    return 0;
}

int cmd_verify(const std::string& input, const std::string& partition_path) {
    Graph g = io::read_graph_file(input);
    auto dm = all_pairs_distances(g);
    auto pi = io::read_partition_file(partition_path);
    auto verdict = is_resolving_partition(dm, pi);
    if (verdict.resolving) {
        std::cout << "resolving\n";
        return 0;
    }
    auto [u, v] = *verdict.witness;
    auto ru = partition_representation(dm, pi, u);
    auto rv = partition_representation(dm, pi, v);
    std::cout << "not resolving: vertices " << u << " and " << v << " share representation (";
    for (size_t i = 0; i < ru.size(); ++i) std::cout << (i ? "," : "") << ru[i];
    std::cout << ") = (";
    for (size_t i = 0; i < rv.size(); ++i) std::cout << (i ? "," : "") << rv[i];
    std::cout << ")\n";
    return 0;
}

int sweep_finish(const SweepResult& result, const std::optional<std::string>& violations_path) {
    std::fprintf(stderr, "\n");
    std::cout << "instances: " << result.instances << "  violations: " << result.violations.size()
              << "\n";
    for (size_t i = 0; i < result.violations.size() && i < 20; ++i) {
        const auto& v = result.violations[i];
        std::cout << "  " << v.instance << " | " << v.check << " | " << v.detail << "\n";
    }
    if (violations_path) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& v : result.violations)
            j.push_back({{"instance", v.instance}, {"check", v.check}, {"detail", v.detail}});
        write_output(violations_path, j.dump(2) + "\n");
    }
    return result.violations.empty() ? 0 : 4;
}

ProgressFn stderr_progress() {
    return [](uint64_t done, uint64_t total) {
        std::fprintf(stderr, "\r%llu/%llu", static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(total));
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolving partitions: anatomy, bounds, constructions and exact search"};
    app.require_subcommand(1);
    std::function<int()> action;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "anatomy and bound report for a graph file");
    {
        static std::string input;
        static bool exact = false, json = false;
        static std::optional<int> limit;
        analyze->add_option("input", input, "edge-list or K-build file")->required();
        analyze->add_flag("--exact", exact, "run the exact pd/dim search");
        analyze->add_flag("--json", json, "JSON output");
        analyze->add_option("--limit", limit, "exact-search size cap (overrides defaults)");
        analyze->callback([&] { action = [&] { return cmd_analyze(input, exact, json, limit); }; });
    }

    // construct
    auto* construct = app.add_subcommand("construct", "build a verified resolving partition");
    {
        static std::string input, method = "auto";
        static std::optional<std::string> out_path;
        construct->add_option("input", input)->required();
        construct->add_option("--method", method)
            ->check(CLI::IsMember({"auto", "path", "star", "thm1", "thm3", "spider", "gentree"}));
        construct->add_option("-o,--output", out_path, "partition file (default: stdout)");
        construct->callback([&] { action = [&] { return cmd_construct(input, method, out_path); }; });
    }

    // verify
    auto* verify = app.add_subcommand("verify", "check a partition file against a graph");
    {
        static std::string input, partition;
        verify->add_option("input", input)->required();
        verify->add_option("partition", partition)->required();
        verify->callback([&] { action = [&] { return cmd_verify(input, partition); }; });
    }

    // sweep
    auto* sweep = app.add_subcommand("sweep", "bound/construction campaign over instance families");
    {
        static std::string kind;
        static TreeSweepParams tp;
        static GenTreeSweepParams gp;
        static uint64_t count = 200;
        static int pd_max = -1, dim_max = -1;  // -1: keep the per-kind default
        static std::optional<std::string> violations_path;
        sweep->add_option("kind", kind)->check(CLI::IsMember({"trees", "gentrees"}))->required();
        sweep->add_option("--min-n", tp.min_n);
        sweep->add_option("--max-n", tp.max_n, "trees: largest order; exhaustive per order");
        sweep->add_option("--pd-max-n", pd_max);
        sweep->add_option("--dim-max-n", dim_max);
        sweep->add_option("--rank-begin", tp.rank_begin, "shard start (per order)");
        sweep->add_option("--rank-end", tp.rank_end, "shard end, exclusive");
        sweep->add_option("--count", count, "gentrees: number of seeds");
        sweep->add_option("--seed-begin", gp.seed_begin);
        sweep->add_option("--max-blocks", gp.shape.max_blocks);
        sweep->add_option("--min-block", gp.shape.min_block_size);
        sweep->add_option("--max-block", gp.shape.max_block_size);
        sweep->add_option("--max-vertices", gp.shape.max_vertices);
        sweep->add_option("--violations", violations_path, "write violations as JSON");
        sweep->add_option("--fault-bound", tp.fault_bound)->group("");  // testing hook
        sweep->add_option("--fault-offset", tp.fault_offset)->group("");
        sweep->callback([&] {
            action = [&] {
                if (kind == "trees") {
                    if (pd_max >= 0) tp.pd_max_n = pd_max;
                    if (dim_max >= 0) tp.dim_max_n = dim_max;
                    return sweep_finish(sweep_trees(tp, stderr_progress()), violations_path);
                }
                if (pd_max >= 0) gp.pd_max_n = pd_max;
                if (dim_max >= 0) gp.dim_max_n = dim_max;
                gp.seed_end = gp.seed_begin + count;
                gp.fault_bound = tp.fault_bound;
                gp.fault_offset = tp.fault_offset;
                return sweep_finish(sweep_gen_trees(gp, stderr_progress()), violations_path);
            };
        });
    }

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "DOT text, classes colored by index");
    {
        static std::string input;
        static std::optional<std::string> partition_path, out_path;
        dot->add_option("input", input)->required();
        dot->add_option("--partition", partition_path);
        dot->add_option("-o,--output", out_path);
        dot->callback([&] {
            action = [&] {
                Graph g = io::read_graph_file(input);
                if (!is_connected(g)) raise(errc::disconnected, "input graph is disconnected");
                std::optional<VertexPartition> pi;
                if (partition_path) pi = io::read_partition_file(*partition_path);
                write_output(out_path, io::to_dot(g, pi ? &*pi : nullptr));
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}

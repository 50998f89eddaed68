#include "respart/io.hpp"

#include <fstream>
#include <sstream>

#include "respart/anatomy.hpp"

namespace respart::io {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void bad_line(const std::string& name, int number, const std::string& why) {
    raise(errc::parse_error, name + ":" + std::to_string(number) + ": " + why);
}

int parse_int(const std::string& name, int number, const std::string& tok) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        bad_line(name, number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) bad_line(name, number, "expected an integer, got '" + tok + "'");
    return value;
}

Graph read_build(const std::vector<Line>& lines, const std::string& name) {
    BuildSequence seq;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] != "K") bad_line(name, line.number, "expected 'K <size> [@ <attach>]'");
        BuildStep step;
        if (t.size() == 2) {
            step.block_size = parse_int(name, line.number, t[1]);
        } else if (t.size() == 4 && t[2] == "@") {
            step.block_size = parse_int(name, line.number, t[1]);
            step.attach = parse_int(name, line.number, t[3]);
        } else {
            bad_line(name, line.number, "expected 'K <size> [@ <attach>]'");
        }
        if (seq.steps.empty() != (step.attach < 0))
            bad_line(name, line.number,
                     seq.steps.empty() ? "first block takes no attach vertex"
                                       : "every later block needs '@ <attach>'");
        seq.steps.push_back(step);
    }
    return gen_tree_from_build(seq);
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& name) {
    auto lines = tokenize(in);
    if (lines.empty()) raise(errc::parse_error, name + ": empty input");
    if (lines[0].tokens[0] == "K") return read_build(lines, name);

    size_t start = 0;
    int n = -1;
    if (lines[0].tokens[0] == "n") {
        if (lines[0].tokens.size() != 2) bad_line(name, lines[0].number, "header is 'n <count>'");
        n = parse_int(name, lines[0].number, lines[0].tokens[1]);
        start = 1;
    }
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    for (size_t i = start; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2) bad_line(name, line.number, "expected 'u v'");
        int u = parse_int(name, line.number, line.tokens[0]);
        int v = parse_int(name, line.number, line.tokens[1]);
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    if (n < 0) n = max_id + 1;
    if (n < 1) raise(errc::parse_error, name + ": no vertices");
    return Graph::from_edge_list(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, path + ": cannot open");
    return read_graph(in, path);
}

VertexPartition read_partition(std::istream& in, const std::string& name) {
    auto lines = tokenize(in);
    VertexPartition pi;
    for (const auto& line : lines) {
        std::vector<int> cls;
        for (const auto& tok : line.tokens) cls.push_back(parse_int(name, line.number, tok));
        pi.classes.push_back(std::move(cls));
    }
    if (pi.classes.empty()) raise(errc::parse_error, name + ": empty partition");
    return pi;
}

VertexPartition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, path + ": cannot open");
    return read_partition(in, path);
}

std::string partition_text(const VertexPartition& pi) {
    std::ostringstream out;
    for (const auto& cls : pi.classes) {
        for (size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
        out << "\n";
    }
    return out.str();
}

void write_partition_file(const std::string& path, const VertexPartition& pi) {
    std::ofstream out(path);
    if (!out) raise(errc::parse_error, path + ": cannot open for writing");
    out << partition_text(pi);
}

std::string to_dot(const Graph& g, const VertexPartition* pi) {
    static const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                     "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                     "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
    std::vector<int> class_of(g.vertex_count(), -1);
    if (pi) {
        validate_partition(g.vertex_count(), *pi);
        for (size_t c = 0; c < pi->classes.size(); ++c)
            for (int v : pi->classes[c]) class_of[v] = static_cast<int>(c);
    }
    std::ostringstream out;
    out << "graph G {\n  node [style=filled];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (pi)
            out << " [fillcolor=\"" << kPalette[class_of[v] % 12] << "\" label=\"" << v << "/"
                << class_of[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json partition_json(const VertexPartition& pi) {
    return nlohmann::json(pi.classes);
}

nlohmann::json report_json(const Graph& g, const BoundsReport& report) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();

    auto verdict = classify_generalized_tree(g);
    j["classification"] = {
        {"connected", is_connected(g)},
        {"tree", is_tree(g)},
        {"path", is_path_graph(g)},
        {"star", is_star_graph(g)},
        {"generalized_tree", verdict == gen_tree_verdict::ok},
        {"generalized_tree_reason", gen_tree_verdict_name(verdict)},
    };

    if (is_tree(g) && !is_path_graph(g)) {
        auto dm = all_pairs_distances(g);
        auto anat = tree_anatomy(g, dm);
        nlohmann::json groups = nlohmann::json::array();
        for (const auto& grp : anat.exterior) {
            nlohmann::json lengths = nlohmann::json::array();
            for (const auto& leg : grp.legs) lengths.push_back(leg.size());
            groups.push_back(
                {{"vertex", grp.vertex}, {"terminals", grp.terminals}, {"leg_lengths", lengths}});
        }
        j["tree_anatomy"] = {
            {"leaves", anat.leaves},
            {"branch_vertices", anat.branch_vertices},
            {"exterior", groups},
            {"multi_terminal_count", anat.multi_count()},
            {"max_terminal_degree", anat.max_terminal_degree},
            {"supports", anat.supports},
            {"max_support_leaves", anat.max_support_leaves},
        };
    }
    if (verdict == gen_tree_verdict::ok) {
        auto bd = block_decomposition(g);
        auto ganat = gen_tree_anatomy(g, bd);
        nlohmann::json cuts = nlohmann::json::array();
        for (const auto& sc : ganat.support_cuts)
            cuts.push_back({{"vertex", sc.vertex}, {"outer_extremes", sc.outer_extremes}});
        nlohmann::json hubs = nlohmann::json::array();
        for (const auto& hb : ganat.hub_blocks)
            hubs.push_back({{"block", bd.blocks[hb.block_index]}, {"extremes", hb.extremes}});
        j["gen_tree_anatomy"] = {
            {"support_cuts", cuts},
            {"hub_blocks", hubs},
            {"max_fan", ganat.max_fan},
        };
    }

    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json je = {{"name", e.name},
                             {"kind", bound_kind_name(e.kind)},
                             {"applicable", e.applicable}};
        if (e.value) je["value"] = *e.value;
        if (e.satisfied) je["satisfied"] = *e.satisfied;
        if (e.tight) je["tight"] = *e.tight;
        bounds.push_back(std::move(je));
    }
    j["bounds"] = std::move(bounds);

    if (report.exact_pd) {
        j["pd"] = *report.exact_pd;
        if (report.pd_witness) j["pd_witness"] = partition_json(*report.pd_witness);
    }
    if (report.exact_dim) {
        j["dim"] = *report.exact_dim;
        if (report.dim_witness) j["dim_witness"] = *report.dim_witness;
    }
    if (report.theta_certificate) j["theta_certificate"] = *report.theta_certificate;
    return j;
}

}  // namespace respart::io

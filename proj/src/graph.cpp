#include "respart/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace respart {

const char* errc_name(errc c) {
    switch (c) {
        case errc::out_of_range: return "OutOfRange";
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::disconnected: return "Disconnected";
        case errc::not_a_tree: return "NotATree";
        case errc::is_a_path: return "IsAPath";
        case errc::not_a_path: return "NotAPath";
        case errc::not_a_star: return "NotAStar";
        case errc::is_a_star: return "IsAStar";
        case errc::not_a_spider: return "NotASpider";
        case errc::too_few_leaves: return "TooFewLeaves";
        case errc::not_generalized_tree: return "NotGeneralizedTree";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::too_large: return "TooLarge";
        case errc::invalid_range: return "InvalidRange";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::verification_failed: return "VerificationFailed";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

const char* gen_tree_verdict_name(gen_tree_verdict v) {
    switch (v) {
        case gen_tree_verdict::ok: return "ok";
        case gen_tree_verdict::disconnected: return "disconnected";
        case gen_tree_verdict::single_block: return "single complete graph (needs >=2 blocks)";
        case gen_tree_verdict::incomplete_block: return "a block is not complete";
    }
    return "unknown";
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) raise(errc::out_of_range, "vertex count must be >= 1, got " + std::to_string(n));
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(errc::out_of_range, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") outside 0.." + std::to_string(n - 1));
        if (u == v) raise(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            raise(errc::duplicate_edge,
                  "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") repeated");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.m_++;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    DistanceMatrix dm(n);
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0)
                raise(errc::disconnected, "vertex " + std::to_string(v) + " unreachable from " +
                                              std::to_string(s));
            dm.at(s, v) = dist[v];
        }
    }
    return dm;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_star_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || !is_tree(g)) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

namespace {

// Hopcroft-Tarjan lowpoint DFS with an edge stack; pops one block per
// articulation discovery. Neighbors are visited in ascending id order so the
// pre-sort below yields a stable block order.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          parent(graph.vertex_count(), -1),
          is_cut(graph.vertex_count(), 0) {}

    void pop_block(std::pair<int, int> until) {
        std::set<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == until) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int u) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (disc[v] < 0) {
                ++children;
                parent[v] = u;
                edge_stack.push_back({u, v});
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent[u] >= 0 || children > 1) is_cut[u] = 1;
                    pop_block({u, v});
                }
            } else if (v != parent[u] && disc[v] < disc[u]) {
                edge_stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) raise(errc::disconnected, "block decomposition needs a connected graph");
    BlockFinder finder(g);
    finder.dfs(0);

    BlockDecomposition bd;
    bd.blocks = std::move(finder.blocks);
    std::sort(bd.blocks.begin(), bd.blocks.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (finder.is_cut[v]) bd.cut_vertices.push_back(v);
        // extreme: closed neighborhood is a clique
        bool extreme = true;
        const auto& nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size() && extreme; ++i)
            for (size_t j = i + 1; j < nbrs.size() && extreme; ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) extreme = false;
        if (extreme) bd.extreme_vertices.push_back(v);
    }
    return bd;
}

gen_tree_verdict classify_generalized_tree(const Graph& g) {
    if (!is_connected(g)) return gen_tree_verdict::disconnected;
    return classify_generalized_tree(g, block_decomposition(g));
}

gen_tree_verdict classify_generalized_tree(const Graph& g, const BlockDecomposition& bd) {
    for (const auto& block : bd.blocks)
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) return gen_tree_verdict::incomplete_block;
    if (bd.blocks.size() < 2) return gen_tree_verdict::single_block;
    return gen_tree_verdict::ok;
}

bool is_generalized_tree(const Graph& g) {
    return classify_generalized_tree(g) == gen_tree_verdict::ok;
}

}  // namespace respart

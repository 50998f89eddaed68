#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "respart/error.hpp"

namespace respart {

/// Undirected simple connected-or-not graph with vertex ids 0..n-1 and
/// sorted adjacency lists. Immutable after construction.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    Graph(int n) : n_(n), m_(0), adj_(n) {}

    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
};

/// Dense hop-count matrix. Entries are finite only for connected graphs.
class DistanceMatrix {
public:
    DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }

private:
    int n_;
    std::vector<int> d_;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // maximal biconnected subgraphs, each sorted,
                                           // ordered lexicographically (min vertex first)
    std::vector<int> cut_vertices;         // sorted
    std::vector<int> extreme_vertices;     // closed neighborhood induces a complete graph; sorted
};

enum class gen_tree_verdict {
    ok,
    disconnected,
    single_block,      // one complete graph alone does not qualify
    incomplete_block,  // some block is not a complete graph
};

const char* gen_tree_verdict_name(gen_tree_verdict v);

std::vector<int> bfs_distances(const Graph& g, int source);

/// Throws errc::disconnected when some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);  // tree with max degree <= 2 (true for n=1,2)
bool is_star_graph(const Graph& g);  // tree with a vertex adjacent to all others, n >= 3

BlockDecomposition block_decomposition(const Graph& g);

/// Connected, every block complete, and at least two blocks.
gen_tree_verdict classify_generalized_tree(const Graph& g);
gen_tree_verdict classify_generalized_tree(const Graph& g, const BlockDecomposition& bd);
bool is_generalized_tree(const Graph& g);

}  // namespace respart

#pragma once

#include <random>
#include <vector>

#include "respart/graph.hpp"
#include "respart/lab.hpp"

// Named instances used across suites.
namespace fixtures {

// two adjacent branch vertices, two leaves each
inline respart::Graph dstar() {
    return respart::Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

inline respart::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return respart::Graph::from_edge_list(n, edges);
}

inline respart::Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return respart::Graph::from_edge_list(leaves + 1, edges);
}

// center 0, three legs of length 2
inline respart::Graph spider222() {
    return respart::Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// spine 0-1-2 with two leaves on each spine vertex
inline respart::Graph cat32() {
    return respart::Graph::from_edge_list(
        9, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
}

// center 0 with leaves 1,2,3 and tail 0-4-5
inline respart::Graph comet() {
    return respart::Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
}

// spider with legs of the given lengths
inline respart::Graph spider(const std::vector<int>& leg_lengths) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : leg_lengths) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return respart::Graph::from_edge_list(next, edges);
}

// two triangles sharing vertex 2
inline respart::Graph bowtie() {
    return respart::Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline respart::Graph two_k4() {
    return respart::Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                              {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}});
}

// random connected graph: random tree plus up to `extra` chords
inline respart::Graph random_connected(int n, int extra, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    auto g = respart::random_tree(n, seed);
    auto edges = g.edges();
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        bool dup = false;
        for (auto [a, b] : edges)
            if ((a == std::min(u, v)) && (b == std::max(u, v))) dup = true;
        if (!dup) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return respart::Graph::from_edge_list(n, edges);
}

inline respart::Graph relabeled(const respart::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return respart::Graph::from_edge_list(g.vertex_count(), edges);
}

}  // namespace fixtures

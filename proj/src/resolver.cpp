#include "respart/resolver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "respart/anatomy.hpp"
#include "respart/kernels.hpp"

namespace respart {

void validate_partition(int n, const VertexPartition& pi) {
    std::vector<int> owner(n, -1);
    if (pi.classes.empty()) raise(errc::invalid_partition, "no classes");
    for (size_t i = 0; i < pi.classes.size(); ++i) {
        if (pi.classes[i].empty())
            raise(errc::invalid_partition, "class " + std::to_string(i) + " is empty");
        for (int v : pi.classes[i]) {
            if (v < 0 || v >= n)
                raise(errc::invalid_partition, "vertex " + std::to_string(v) + " out of range");
            if (owner[v] >= 0)
                raise(errc::invalid_partition,
                      "vertex " + std::to_string(v) + " appears in classes " +
                          std::to_string(owner[v]) + " and " + std::to_string(i));
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0)
            raise(errc::invalid_partition, "vertex " + std::to_string(v) + " not covered");
}

namespace {

Representation representation_unchecked(const DistanceMatrix& dm, const VertexPartition& pi,
                                        int v) {
    Representation coords(pi.classes.size());
    for (size_t i = 0; i < pi.classes.size(); ++i) {
        int best = dm.at(v, pi.classes[i][0]);
        for (int u : pi.classes[i]) best = std::min(best, dm.at(v, u));
        coords[i] = best;
    }
    return coords;
}

ResolutionVerdict first_collision(const std::vector<Representation>& reps) {
    int n = static_cast<int>(reps.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (reps[u] == reps[v]) return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

}  // namespace

Representation partition_representation(const DistanceMatrix& dm, const VertexPartition& pi,
                                        int v) {
    validate_partition(dm.size(), pi);
    if (v < 0 || v >= dm.size()) raise(errc::invalid_partition, "vertex out of range");
    return representation_unchecked(dm, pi, v);
}

ResolutionVerdict is_resolving_partition(const DistanceMatrix& dm, const VertexPartition& pi) {
    validate_partition(dm.size(), pi);
    std::vector<Representation> reps;
    reps.reserve(dm.size());
    for (int v = 0; v < dm.size(); ++v) reps.push_back(representation_unchecked(dm, pi, v));
    return first_collision(reps);
}

Representation metric_representation(const DistanceMatrix& dm, const std::vector<int>& landmarks,
                                     int v) {
    if (v < 0 || v >= dm.size()) raise(errc::out_of_range, "vertex out of range");
    Representation coords(landmarks.size());
    for (size_t j = 0; j < landmarks.size(); ++j) {
        if (landmarks[j] < 0 || landmarks[j] >= dm.size())
            raise(errc::out_of_range, "landmark out of range");
        coords[j] = dm.at(v, landmarks[j]);
    }
    return coords;
}

ResolutionVerdict is_resolving_set(const DistanceMatrix& dm, const std::vector<int>& landmarks) {
    std::vector<Representation> reps;
    reps.reserve(dm.size());
    for (int v = 0; v < dm.size(); ++v) reps.push_back(metric_representation(dm, landmarks, v));
    return first_collision(reps);
}

namespace {

// Restricted growth strings with exactly t classes: each set partition is
// enumerated once, classes in first-occurrence order.
struct PdSearch {
    const kernels::DistTable& dt;
    const kernels::KernelSet& ks;
    int n, t;
    uint16_t masks[kernels::kMaxVertices] = {};
    std::vector<int> assign;

    PdSearch(const kernels::DistTable& table, const kernels::KernelSet& kernel_set, int classes)
        : dt(table), ks(kernel_set), n(table.n), t(classes), assign(table.n, 0) {}

    bool run() {
        masks[0] = 1;  // vertex 0 is pinned to class 0
        return descend(1, 1);
    }

    bool descend(int v, int used) {
        if (v == n) return used == t && ks.partition_resolves(dt, masks, t);
        if (used + (n - v) < t) return false;  // not enough vertices left to open t classes
        int limit = used < t ? used : t - 1;
        for (int c = 0; c <= limit; ++c) {
            masks[c] |= static_cast<uint16_t>(1u << v);
            assign[v] = c;
            if (descend(v + 1, c == used ? used + 1 : used)) return true;
            masks[c] &= static_cast<uint16_t>(~(1u << v));
        }
        return false;
    }

    VertexPartition partition() const {
        VertexPartition pi;
        pi.classes.resize(t);
        for (int v = 0; v < n; ++v) pi.classes[assign[v]].push_back(v);
        return pi;
    }
};

}  // namespace

PdResult partition_dimension_exact(const Graph& g, const DistanceMatrix& dm,
                                   const ExactOptions& opts) {
    int n = g.vertex_count();
    if (!is_connected(g)) raise(errc::disconnected, "partition dimension needs a connected graph");
    if (n > opts.pd_max_n)
        raise(errc::too_large, "n=" + std::to_string(n) + " exceeds pd search limit " +
                                   std::to_string(opts.pd_max_n));
    if (n == 1) return {1, VertexPartition{{{0}}}};

    int start = 2;
    if (opts.use_structural_bounds) {
        if (!is_path_graph(g)) start = 3;
        if (is_tree(g)) start = std::max(start, support_stats(g).max_support_leaves);
    }

    auto dt = kernels::make_dist_table(dm);
    const auto& ks = kernels::active();
    for (int t = start; t <= n; ++t) {
        PdSearch search(dt, ks, t);
        if (search.run()) return {t, search.partition()};
    }
    raise(errc::verification_failed, "singleton partition failed to resolve");
}

bool exists_resolving_partition(const Graph& g, const DistanceMatrix& dm, int class_count) {
    if (!is_connected(g)) raise(errc::disconnected, "needs a connected graph");
    if (class_count < 1 || class_count > g.vertex_count()) return false;
    if (g.vertex_count() == 1) return true;
    auto dt = kernels::make_dist_table(dm);
    PdSearch search(dt, kernels::active(), class_count);
    return search.run();
}

DimResult metric_dimension_exact(const Graph& g, const DistanceMatrix& dm,
                                 const ExactOptions& opts) {
    int n = g.vertex_count();
    if (!is_connected(g)) raise(errc::disconnected, "metric dimension needs a connected graph");
    if (n > opts.dim_max_n)
        raise(errc::too_large, "n=" + std::to_string(n) + " exceeds dim search limit " +
                                   std::to_string(opts.dim_max_n));
    if (n == 1) return {0, {}};

    auto dt = kernels::make_dist_table(dm);
    const auto& ks = kernels::active();
    std::vector<uint8_t> combo(n);
    for (int k = 1; k <= n - 1; ++k) {
        std::iota(combo.begin(), combo.begin() + k, 0);
        while (true) {
            if (ks.set_resolves(dt, combo.data(), k))
                return {k, std::vector<int>(combo.begin(), combo.begin() + k)};
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    raise(errc::verification_failed, "n-1 landmarks failed to resolve");
}

}  // namespace respart

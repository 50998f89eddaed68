#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "respart/graph.hpp"

namespace respart {

/// Ordered partition of V; class order is significant because representations
/// are ordered vectors.
struct VertexPartition {
    std::vector<std::vector<int>> classes;

    int class_count() const { return static_cast<int>(classes.size()); }
};

using Representation = std::vector<int>;

struct ResolutionVerdict {
    bool resolving = false;
    std::optional<std::pair<int, int>> witness;  // lexicographically least colliding pair
};

/// Throws errc::invalid_partition unless classes are non-empty, disjoint and
/// cover 0..n-1 exactly.
void validate_partition(int n, const VertexPartition& pi);

Representation partition_representation(const DistanceMatrix& dm, const VertexPartition& pi,
                                        int v);
ResolutionVerdict is_resolving_partition(const DistanceMatrix& dm, const VertexPartition& pi);

Representation metric_representation(const DistanceMatrix& dm, const std::vector<int>& landmarks,
                                     int v);
ResolutionVerdict is_resolving_set(const DistanceMatrix& dm, const std::vector<int>& landmarks);

struct ExactOptions {
    int pd_max_n = 12;   // Bell growth caps the partition search
    int dim_max_n = 14;
    // Start the pd search at max(2, 3-if-not-a-path, max-support-leaves-if-tree)
    // instead of always at 2. Sweeps turn this off so those same claims are
    // certified by an unassisted search.
    bool use_structural_bounds = true;
};

struct PdResult {
    int dimension = 0;
    VertexPartition witness;
};

struct DimResult {
    int dimension = 0;
    std::vector<int> witness;
};

/// Minimum class count over resolving partitions, with the first witness in
/// canonical enumeration order (restricted growth strings, ascending t).
PdResult partition_dimension_exact(const Graph& g, const DistanceMatrix& dm,
                                   const ExactOptions& opts = {});

/// Scans the partitions with exactly `class_count` classes; n <= 16.
bool exists_resolving_partition(const Graph& g, const DistanceMatrix& dm, int class_count);

/// Minimum resolving-set size, subsets enumerated lexicographically by
/// ascending size.
DimResult metric_dimension_exact(const Graph& g, const DistanceMatrix& dm,
                                 const ExactOptions& opts = {});

}  // namespace respart

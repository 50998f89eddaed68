#pragma once

#include <optional>
#include <string>
#include <vector>

#include "respart/anatomy.hpp"
#include "respart/graph.hpp"
#include "respart/resolver.hpp"

namespace respart {

enum class bound_kind { upper, lower, equality, characterization };

const char* bound_kind_name(bound_kind k);

struct BoundEntry {
    std::string name;
    bound_kind kind = bound_kind::upper;
    bool applicable = false;
    std::optional<int> value;       // absent when not applicable (or when eq1 lacks dim)
    std::optional<bool> satisfied;  // only when the relevant exact value is known
    std::optional<bool> tight;      // upper/lower/equality only

    bool violated() const { return satisfied.has_value() && !*satisfied; }
};

struct BoundsReport {
    std::vector<BoundEntry> entries;
    std::optional<int> exact_pd;
    std::optional<int> exact_dim;
    std::optional<VertexPartition> pd_witness;
    std::optional<std::vector<int>> dim_witness;
    std::optional<int> theta_certificate;  // a support vertex attaining max_support_leaves

    const BoundEntry* find(const std::string& name) const;
};

struct ReportOptions {
    bool compute_exact = false;
    ExactOptions exact;
};

/// dim of a non-path tree: leaf count minus exterior branch vertices.
int dim_formula(const TreeAnatomy& anat);

/// One entry per bound/characterization; inapplicable entries carry no value.
BoundsReport bounds_report(const Graph& g, const ReportOptions& opts = {});

}  // namespace respart

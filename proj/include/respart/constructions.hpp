#pragma once

#include "respart/anatomy.hpp"
#include "respart/graph.hpp"
#include "respart/resolver.hpp"

namespace respart {

// Each builder realizes one of the constructive upper-bound arguments, checks
// that its output is an exact cover of V and verifies it resolves before
// returning. A verification failure is an internal bug, never a user error.

/// {{least endpoint}, rest}; 2 classes.
VertexPartition construct_path(const Graph& g, const DistanceMatrix& dm);

/// {{center, leaf_1}, {leaf_2}, ...}; leaf_count classes.
VertexPartition construct_star(const Graph& g, const DistanceMatrix& dm);

/// Branch construction: multi_count + max_terminal_degree - 1 classes.
/// First legs become singleton-leg classes, same-index legs pool together,
/// everything else (branch vertices, longest legs, single-terminal groups)
/// stays in the ground class.
VertexPartition construct_thm1(const Graph& g, const DistanceMatrix& dm, const TreeAnatomy& anat);

/// Spider construction from the star characterization: leaf_count - 1 classes.
/// Needs a single exterior branch vertex, not a star, >= 4 leaves.
VertexPartition construct_spider(const Graph& g, const DistanceMatrix& dm,
                                 const TreeAnatomy& anat);

/// True iff every vertex on a path between two multi-terminal branch vertices
/// is itself a multi-terminal branch vertex.
bool thm3_precondition(const Graph& g, const DistanceMatrix& dm, const TreeAnatomy& anat);

/// Core construction: max(multi_count, max_terminal_degree + 1) classes, each
/// holding one branch vertex plus at most one whole leg per branch vertex,
/// legs assigned injectively to class indices other than their own.
VertexPartition construct_thm3(const Graph& g, const DistanceMatrix& dm, const TreeAnatomy& anat);

/// Generalized-tree construction: support_cuts + hub_blocks + max_fan - 1
/// classes when max_fan >= 3, else support_cuts + hub_blocks + 1.
VertexPartition construct_gentree(const Graph& g, const DistanceMatrix& dm,
                                  const GenTreeAnatomy& anat);

int thm1_class_count(const TreeAnatomy& anat);
int thm3_class_count(const TreeAnatomy& anat);
int gentree_class_count(const GenTreeAnatomy& anat);

}  // namespace respart

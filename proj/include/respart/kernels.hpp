#pragma once

#include <cstdint>
#include <vector>

#include "respart/graph.hpp"

namespace respart::kernels {

// Fast distinctness checks behind the exact searches. Graphs are capped at 16
// vertices so that a distance column is one 16-byte register and a whole
// representation packs into a u64 (hop counts <= 15 fit in 4-bit nibbles).
//
// Layout: col[u][v] = d(u, v), column-major and 16-byte aligned. Lanes v >= n
// and the extra column kMaxVertices hold 0xFF so paired-register variants can
// pad with a min-identity column.

inline constexpr int kMaxVertices = 16;

struct DistTable {
    alignas(16) uint8_t col[kMaxVertices + 1][kMaxVertices];
    int n = 0;
};

/// Requires dm.size() <= 16; throws errc::too_large otherwise.
DistTable make_dist_table(const DistanceMatrix& dm);

/// class_mask[i]: bitmask of the vertices in class i. True iff all partition
/// representations are pairwise distinct.
using PartitionResolvesFn = bool (*)(const DistTable&, const uint16_t* class_mask, int t);

/// verts[j]: j-th landmark vertex. True iff all metric representations are
/// pairwise distinct.
using SetResolvesFn = bool (*)(const DistTable&, const uint8_t* verts, int k);

struct KernelSet {
    const char* name;
    PartitionResolvesFn partition_resolves;
    SetResolvesFn set_resolves;
};

/// Variants usable on this CPU, scalar reference first.
const std::vector<KernelSet>& available();

/// Fastest usable variant; RESPART_KERNEL=<name> overrides.
const KernelSet& active();

namespace scalar {
bool partition_resolves(const DistTable& dt, const uint16_t* class_mask, int t);
bool set_resolves(const DistTable& dt, const uint8_t* verts, int k);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace sse2 {
bool partition_resolves(const DistTable& dt, const uint16_t* class_mask, int t);
bool set_resolves(const DistTable& dt, const uint8_t* verts, int k);
}  // namespace sse2
namespace avx2 {
bool partition_resolves(const DistTable& dt, const uint16_t* class_mask, int t);
bool set_resolves(const DistTable& dt, const uint8_t* verts, int k);
}  // namespace avx2
#endif

}  // namespace respart::kernels

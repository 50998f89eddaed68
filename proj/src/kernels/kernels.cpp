#include "respart/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace respart::kernels {

DistTable make_dist_table(const DistanceMatrix& dm) {
    if (dm.size() > kMaxVertices)
        raise(errc::too_large, "kernel tables hold at most " + std::to_string(kMaxVertices) +
                                   " vertices, got " + std::to_string(dm.size()));
    DistTable dt;
    dt.n = dm.size();
    std::memset(dt.col, 0xFF, sizeof(dt.col));
    for (int u = 0; u < dt.n; ++u)
        for (int v = 0; v < dt.n; ++v) {
            int d = dm.at(u, v);
            if (d > 15)
                raise(errc::verification_failed, "hop count exceeds nibble range");
            dt.col[u][v] = static_cast<uint8_t>(d);
        }
    return dt;
}

namespace scalar {

// Reference implementation: plain loops, kept deliberately simple. The SIMD
// variants are equivalence-tested against this one.
bool partition_resolves(const DistTable& dt, const uint16_t* class_mask, int t) {
    uint64_t keys[kMaxVertices];
    for (int v = 0; v < dt.n; ++v) {
        uint64_t key = 0;
        for (int i = 0; i < t; ++i) {
            unsigned best = 0xFF;
            for (uint16_t m = class_mask[i]; m != 0; m &= m - 1) {
                int u = __builtin_ctz(m);
                unsigned d = dt.col[u][v];
                if (d < best) best = d;
            }
            key |= static_cast<uint64_t>(best) << (4 * i);
        }
        for (int w = 0; w < v; ++w)
            if (keys[w] == key) return false;
        keys[v] = key;
    }
    return true;
}

bool set_resolves(const DistTable& dt, const uint8_t* verts, int k) {
    uint64_t keys[kMaxVertices];
    for (int v = 0; v < dt.n; ++v) {
        uint64_t key = 0;
        for (int j = 0; j < k; ++j)
            key |= static_cast<uint64_t>(dt.col[verts[j]][v]) << (4 * j);
        for (int w = 0; w < v; ++w)
            if (keys[w] == key) return false;
        keys[v] = key;
    }
    return true;
}

}  // namespace scalar

namespace {

std::vector<KernelSet> build_available() {
    std::vector<KernelSet> sets;
    sets.push_back({"scalar", &scalar::partition_resolves, &scalar::set_resolves});
#if defined(__x86_64__) || defined(_M_X64)
    sets.push_back({"sse2", &sse2::partition_resolves, &sse2::set_resolves});
    if (__builtin_cpu_supports("avx2"))
        sets.push_back({"avx2", &avx2::partition_resolves, &avx2::set_resolves});
#endif
    return sets;
}

KernelSet pick_active() {
    const auto& sets = available();
    if (const char* want = std::getenv("RESPART_KERNEL")) {
        for (const auto& s : sets)
            if (std::string(want) == s.name) return s;
        std::fprintf(stderr, "respart: kernel '%s' unavailable, using '%s'\n", want,
                     sets.back().name);
    }
    return sets.back();
}

}  // namespace

const std::vector<KernelSet>& available() {
    static const std::vector<KernelSet> sets = build_available();
    return sets;
}

const KernelSet& active() {
    static const KernelSet chosen = pick_active();
    return chosen;
}

}  // namespace respart::kernels

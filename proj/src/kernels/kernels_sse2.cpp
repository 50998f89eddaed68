#if defined(__x86_64__) || defined(_M_X64)

#include <emmintrin.h>

#include "respart/kernels.hpp"

namespace respart::kernels::sse2 {

// One class coordinate column = byte-wise min over the member columns.
bool partition_resolves(const DistTable& dt, const uint16_t* class_mask, int t) {
    alignas(16) uint8_t coord[kMaxVertices][kMaxVertices];
    for (int i = 0; i < t; ++i) {
        uint16_t m = class_mask[i];
        int u = __builtin_ctz(m);
        m &= m - 1;
        __m128i acc = _mm_load_si128(reinterpret_cast<const __m128i*>(dt.col[u]));
        while (m != 0) {
            u = __builtin_ctz(m);
            m &= m - 1;
            acc = _mm_min_epu8(acc, _mm_load_si128(reinterpret_cast<const __m128i*>(dt.col[u])));
        }
        _mm_store_si128(reinterpret_cast<__m128i*>(coord[i]), acc);
    }

    uint64_t keys[kMaxVertices];
    for (int v = 0; v < dt.n; ++v) {
        uint64_t key = 0;
        for (int i = 0; i < t; ++i)
            key |= static_cast<uint64_t>(coord[i][v]) << (4 * i);
        for (int w = 0; w < v; ++w)
            if (keys[w] == key) return false;
        keys[v] = key;
    }
    return true;
}

bool set_resolves(const DistTable& dt, const uint8_t* verts, int k) {
    // landmark columns already are the coordinate columns; nothing to min
    return scalar::set_resolves(dt, verts, k);
}

}  // namespace respart::kernels::sse2

#endif

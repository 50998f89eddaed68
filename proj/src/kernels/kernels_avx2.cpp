#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "respart/kernels.hpp"

namespace respart::kernels::avx2 {

namespace {

// Widen a 16xu8 column into four 4xu64 lanes, shift into nibble slot i and
// OR into the key accumulators.
inline void fold_column(__m128i c, int slot, __m256i& k0, __m256i& k1, __m256i& k2, __m256i& k3) {
    __m128i sh = _mm_cvtsi32_si128(4 * slot);
    k0 = _mm256_or_si256(k0, _mm256_sll_epi64(_mm256_cvtepu8_epi64(c), sh));
    k1 = _mm256_or_si256(k1, _mm256_sll_epi64(_mm256_cvtepu8_epi64(_mm_srli_si128(c, 4)), sh));
    k2 = _mm256_or_si256(k2, _mm256_sll_epi64(_mm256_cvtepu8_epi64(_mm_srli_si128(c, 8)), sh));
    k3 = _mm256_or_si256(k3, _mm256_sll_epi64(_mm256_cvtepu8_epi64(_mm_srli_si128(c, 12)), sh));
}

inline bool keys_distinct(const uint64_t* keys, int n) {
    for (int v = 1; v < n; ++v)
        for (int w = 0; w < v; ++w)
            if (keys[w] == keys[v]) return false;
    return true;
}

}  // namespace

bool partition_resolves(const DistTable& dt, const uint16_t* class_mask, int t) {
    __m256i k0 = _mm256_setzero_si256(), k1 = k0, k2 = k0, k3 = k0;
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
        fold_column(acc, i, k0, k1, k2, k3);
    }

    alignas(32) uint64_t keys[kMaxVertices];
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 0), k0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 4), k1);
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 8), k2);
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 12), k3);
    // padding lanes carry 0xFF nibbles from the pad distances but only lanes
    // v < n are compared
    return keys_distinct(keys, dt.n);
}

bool set_resolves(const DistTable& dt, const uint8_t* verts, int k) {
    __m256i k0 = _mm256_setzero_si256(), k1 = k0, k2 = k0, k3 = k0;
    for (int j = 0; j < k; ++j) {
        __m128i c = _mm_load_si128(reinterpret_cast<const __m128i*>(dt.col[verts[j]]));
        fold_column(c, j, k0, k1, k2, k3);
    }
    alignas(32) uint64_t keys[kMaxVertices];
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 0), k0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 4), k1);
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 8), k2);
    _mm256_store_si256(reinterpret_cast<__m256i*>(keys + 12), k3);
    return keys_distinct(keys, dt.n);
}

}  // namespace respart::kernels::avx2

#endif

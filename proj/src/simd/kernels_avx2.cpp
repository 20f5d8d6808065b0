// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2. Only reached through active_kernels() after a CPU check.

#include <immintrin.h>

#include <bit>

#include "fermroute/simd.hpp"

namespace fermroute::simd {

namespace {

inline __m256i load(const uint64_t *p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p)); }
inline void store(uint64_t *p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v); }

void xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    for (; i < n; i++) dst[i] ^= src[i];
}

void and_xor_into(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i t = _mm256_and_si256(load(a + i), load(b + i));
        store(dst + i, _mm256_xor_si256(load(dst + i), t));
    }
    for (; i < n; i++) dst[i] ^= a[i] & b[i];
}

void or_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; i++) dst[i] |= src[i];
}

void swap_words(uint64_t *a, uint64_t *b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = load(a + i);
        store(a + i, load(b + i));
        store(b + i, va);
    }
    for (; i < n; i++) {
        uint64_t t = a[i];
        a[i] = b[i];
        b[i] = t;
    }
}

void invert(uint64_t *dst, size_t n) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), ones));
    for (; i < n; i++) dst[i] = ~dst[i];
}

void phase_add_i(uint64_t *hi, uint64_t *lo, const uint64_t *m, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vm = load(m + i);
        __m256i vl = load(lo + i);
        __m256i carry = _mm256_and_si256(vl, vm);
        store(lo + i, _mm256_xor_si256(vl, vm));
        store(hi + i, _mm256_xor_si256(load(hi + i), carry));
    }
    for (; i < n; i++) {
        uint64_t carry = lo[i] & m[i];
        lo[i] ^= m[i];
        hi[i] ^= carry;
    }
}

// Nibble lookup popcount, summed per 64-bit lane with SAD.
uint64_t popcount(const uint64_t *a, size_t n) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = load(a + i);
        __m256i lo = _mm256_and_si256(v, low);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; i++) total += std::popcount(a[i]);
    return total;
}

}  // namespace

const Kernels *avx2_kernels() {
    static const Kernels k{"avx2", xor_into, and_xor_into, or_into, swap_words, invert, phase_add_i, popcount};
    return &k;
}

}  // namespace fermroute::simd

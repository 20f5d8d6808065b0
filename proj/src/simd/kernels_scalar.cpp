// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <utility>

#include "fermroute/simd.hpp"

namespace fermroute::simd {

namespace {

void xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) dst[i] ^= src[i];
}

void and_xor_into(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t n) {
    for (size_t i = 0; i < n; i++) dst[i] ^= a[i] & b[i];
}

void or_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) dst[i] |= src[i];
}

void swap_words(uint64_t *a, uint64_t *b, size_t n) {
    for (size_t i = 0; i < n; i++) std::swap(a[i], b[i]);
}

void invert(uint64_t *dst, size_t n) {
    for (size_t i = 0; i < n; i++) dst[i] = ~dst[i];
}

void phase_add_i(uint64_t *hi, uint64_t *lo, const uint64_t *m, size_t n) {
    for (size_t i = 0; i < n; i++) {
        uint64_t carry = lo[i] & m[i];
        lo[i] ^= m[i];
        hi[i] ^= carry;
    }
}

uint64_t popcount(const uint64_t *a, size_t n) {
    uint64_t total = 0;
    for (size_t i = 0; i < n; i++) total += std::popcount(a[i]);
    return total;
}

}  // namespace

const Kernels &scalar_kernels() {
    static const Kernels k{"scalar", xor_into, and_xor_into, or_into, swap_words, invert, phase_add_i, popcount};
    return k;
}

}  // namespace fermroute::simd

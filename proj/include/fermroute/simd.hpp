// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

// Bit-sliced word kernels. Each uint64_t carries one bit for 64 independent samples.
// Lengths are in words; pointers need no particular alignment.
namespace fermroute::simd {

struct Kernels {
    const char *name;
    // dst ^= src
    void (*xor_into)(uint64_t *dst, const uint64_t *src, size_t n);
    // dst ^= a & b
    void (*and_xor_into)(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t n);
    // dst |= src
    void (*or_into)(uint64_t *dst, const uint64_t *src, size_t n);
    void (*swap_words)(uint64_t *a, uint64_t *b, size_t n);
    // dst = ~dst
    void (*invert)(uint64_t *dst, size_t n);
    // (hi,lo) is a 2-bit phase exponent of i; adds 1 where m is set.
    void (*phase_add_i)(uint64_t *hi, uint64_t *lo, const uint64_t *m, size_t n);
    uint64_t (*popcount)(const uint64_t *a, size_t n);
};

const Kernels &scalar_kernels();
// nullptr when the AVX2 variant is not compiled in.
const Kernels *avx2_kernels();
bool cpu_has_avx2();

// AVX2 when the CPU supports it, unless FERMROUTE_SIMD=scalar is set in the environment.
const Kernels &active_kernels();

}  // namespace fermroute::simd

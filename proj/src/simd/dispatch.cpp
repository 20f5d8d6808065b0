// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <cstring>

#include "fermroute/simd.hpp"

namespace fermroute::simd {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels &active_kernels() {
    static const Kernels *chosen = [] {
        const char *force = std::getenv("FERMROUTE_SIMD");
        if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
        if (cpu_has_avx2() && avx2_kernels()) return avx2_kernels();
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace fermroute::simd

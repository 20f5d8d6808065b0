// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "fermroute/circuit.hpp"
#include "fermroute/simd.hpp"

namespace fermroute {

struct NoiseParams {
    double p2q = 0.0;
    double p_idle = 0.0;  // per idle qubit per entangling layer
    uint64_t shots = 1000000;
    uint64_t seed = 1;

    static NoiseParams standard(double p2q, uint64_t shots, uint64_t seed) { return {p2q, 0.1 * p2q, shots, seed}; }
};

struct FrameResult {
    uint64_t shots = 0;
    uint64_t successes = 0;
    double fidelity = 0.0;
    double std_error = 0.0;
};

// Noisy circuit, noiseless inverse, measure all from |0...0>. A shot succeeds when the
// propagated frame has no X component on any qubit. Clifford gates only (std::invalid_argument
// otherwise). Shots run in blocks of 64*kFrameBlockWords, block b seeded with derive_seed(seed, b).
constexpr size_t kFrameBlockWords = 16;
FrameResult pauli_frame_sample(const GateList &gates, int rows, int cols, const NoiseParams &noise);
FrameResult pauli_frame_sample(const GateList &gates, int rows, int cols, const NoiseParams &noise,
                               const simd::Kernels &kernels);

}  // namespace fermroute

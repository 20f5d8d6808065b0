// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermroute/circuit.hpp"
#include "fermroute/core.hpp"

namespace fermroute {

enum class FpermMethod { Ours, OneD };

const char *method_name(FpermMethod m);
FpermMethod method_from_name(const std::string &name);

// Row sort, Gamma, bare column sort, Gamma, row sort.
GateList compile_fperm_gates(const Permutation &pi, int L);
Circuit compile_fperm(const Permutation &pi, int L);
// One OET of FSWAPs along the snake.
GateList compile_fperm_1d_gates(const Permutation &pi, int L);
Circuit compile_fperm_1d(const Permutation &pi, int L);
GateList compile_gates(FpermMethod m, const Permutation &pi, int L);

struct NamedPermutation {
    std::string family;  // reversal, transpose, random
    int instance = 0;
    Permutation pi;
};

// Reversal, transpose, then `random_count` Fisher-Yates permutations seeded by derive_seed(seed, i).
std::vector<NamedPermutation> benchmark_ensemble(int L, int random_count, uint64_t seed);

struct CostRow {
    std::string method;
    std::optional<int64_t> depth;  // empty when L is outside the model's domain
    int64_t ancillas = 0;
    int64_t qubits = 0;
};

int64_t cost_ours(int L);
int64_t cost_oned(int L);
int64_t cost_ancilla_gamma(int L);
// The reconf and staircase models need L a power of two; they throw std::domain_error otherwise.
int64_t cost_reconf(int L);
int64_t cost_staircase(int L);
std::vector<CostRow> cost_table(int L);

// Integer scan of the closed forms: first L with 2L^2 > 22L + 20.
int depth_crossover_L();

struct CrossoverPoint {
    int L = 0;
    double fidelity_ours = 0;
    double fidelity_oned = 0;
};

// Mean analytic fidelity over `random_count` random permutations, both methods, each L in [L_min, L_max].
std::vector<CrossoverPoint> fidelity_scan(double p2q, int L_min, int L_max, int random_count, uint64_t seed);
// Smallest L from which ours stays ahead of the 1D baseline over the scanned range; 0 if never.
int analytic_crossover(double p2q, int L_max = 20, int random_count = 20, uint64_t seed = 1);

}  // namespace fermroute

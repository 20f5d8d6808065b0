// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "fermroute/circuit.hpp"
#include "fermroute/core.hpp"

namespace fermroute {

// Row-column-row factorization of a grid permutation. rowA[r] and rowB[r] act on the column
// index inside row r; col[c] acts on the row index inside column c.
struct RcrPlan {
    int L = 0;
    std::vector<Permutation> rowA;
    std::vector<Permutation> col;
    std::vector<Permutation> rowB;
};

// dest[r*L + c] is the row-major cell that the item at (r,c) must reach.
RcrPlan hall_rcr_plan_cells(const std::vector<int> &dest, int L);
// pi acts on snake JW indices.
RcrPlan hall_rcr_plan(const Permutation &pi, int L);

// Row-major destination of every row-major source cell after running the three stages.
std::vector<int> apply_rcr_cells(const RcrPlan &plan);
// The JW-index permutation realized by the plan.
Permutation rcr_permutation(const RcrPlan &plan);

struct OetSchedule {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> rounds;
};

// Odd-even transposition sort of a line whose element at position i must go to targets[i].
// Round t uses pairs starting at t mod 2. Stops once sorted.
OetSchedule oet_schedule(const std::vector<int> &targets);

// kind is FSWAP (fermionic stages) or SWAP (plain qubit relayout).
GateList row_stage_gates(const std::vector<Permutation> &stage, int L, GateKind kind = GateKind::FSWAP);
GateList column_stage_gates(const std::vector<Permutation> &stage, int L, GateKind kind = GateKind::FSWAP);
// One OET over the whole snake chain of an L x L grid.
GateList chain_sort_gates(const Permutation &pi, int L);

Circuit row_stage_circuit(const std::vector<Permutation> &stage, int L);
Circuit bare_column_sort_circuit(const std::vector<Permutation> &stage, int L);
Circuit chain_sort_circuit(const Permutation &pi, int L);

// Plain qubit permutation with SWAP gates, via the same three-stage plan.
GateList relayout_gates(const std::vector<int> &dest, int L);

}  // namespace fermroute

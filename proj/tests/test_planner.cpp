// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fermroute/planner.hpp"

namespace fermroute {
namespace {

bool all_identity(const std::vector<Permutation> &ps) {
    for (const auto &p : ps) {
        if (!p.is_identity()) return false;
    }
    return true;
}

TEST(HallRcr, IdentityGivesIdentityStages) {
    for (int L = 1; L <= 9; L++) {
        RcrPlan plan = hall_rcr_plan(Permutation::identity(L * L), L);
        EXPECT_TRUE(all_identity(plan.rowA));
        EXPECT_TRUE(all_identity(plan.col));
        EXPECT_TRUE(all_identity(plan.rowB));
    }
}

TEST(HallRcr, TransposeAtTwo) {
    Permutation t = transpose_permutation(2);
    RcrPlan plan = hall_rcr_plan(t, 2);
    EXPECT_EQ(rcr_permutation(plan), t);
}

TEST(HallRcr, RandomPermutationsCompose) {
    std::mt19937_64 rng(11);
    for (int L : {2, 3, 5, 6, 7, 8, 12}) {
        for (int rep = 0; rep < 20; rep++) {
            Permutation pi = random_permutation(L * L, rng);
            RcrPlan plan = hall_rcr_plan(pi, L);
            ASSERT_EQ(rcr_permutation(plan), pi) << "L=" << L;
        }
    }
}

TEST(HallRcr, Deterministic) {
    std::mt19937_64 rng(5);
    Permutation pi = random_permutation(64, rng);
    RcrPlan a = hall_rcr_plan(pi, 8), b = hall_rcr_plan(pi, 8);
    EXPECT_EQ(a.rowA, b.rowA);
    EXPECT_EQ(a.col, b.col);
    EXPECT_EQ(a.rowB, b.rowB);
}

TEST(HallRcr, RejectsWrongSize) { EXPECT_THROW(hall_rcr_plan(Permutation::identity(5), 2), std::invalid_argument); }

std::vector<int> run_schedule(const OetSchedule &s, std::vector<int> v) {
    for (const auto &round : s.rounds) {
        for (auto [i, j] : round) std::swap(v[i], v[j]);
    }
    return v;
}

TEST(Oet, SortedInputHasNoRounds) {
    OetSchedule s = oet_schedule({0, 1, 2, 3});
    for (const auto &r : s.rounds) EXPECT_TRUE(r.empty());
}

TEST(Oet, ReversalFour) {
    std::vector<int> t = {3, 2, 1, 0};
    OetSchedule s = oet_schedule(t);
    EXPECT_LE(s.rounds.size(), 4u);
    EXPECT_EQ(run_schedule(s, t), (std::vector<int>{0, 1, 2, 3}));
}

TEST(Oet, RandomThirtyOne) {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 50; rep++) {
        std::vector<int> t = random_permutation(31, rng).map();
        OetSchedule s = oet_schedule(t);
        EXPECT_LE(s.rounds.size(), 31u);
        for (size_t r = 0; r < s.rounds.size(); r++) {
            std::vector<char> used(31, 0);
            for (auto [i, j] : s.rounds[r]) {
                EXPECT_EQ(j, i + 1);
                EXPECT_EQ(i % 2, static_cast<int>(r % 2));
                EXPECT_FALSE(used[i] || used[j]);
                used[i] = used[j] = 1;
            }
        }
        std::vector<int> sorted(31);
        for (int i = 0; i < 31; i++) sorted[i] = i;
        EXPECT_EQ(run_schedule(s, t), sorted);
    }
}

TEST(Oet, RejectsInvalidTargets) { EXPECT_THROW(oet_schedule({0, 0, 1}), std::invalid_argument); }

TEST(StageCircuits, IdentityStageIsEmpty) {
    std::vector<Permutation> id(4, Permutation::identity(4));
    EXPECT_EQ(row_stage_circuit(id, 4).gate_count(), 0u);
    EXPECT_EQ(bare_column_sort_circuit(id, 4).gate_count(), 0u);
}

TEST(StageCircuits, ColumnReversalDepth) {
    std::vector<Permutation> rev(4, Permutation::reversal(4));
    Circuit c = bare_column_sort_circuit(rev, 4);
    EXPECT_LE(metrics(c).cnot_depth, 8);
    for (const auto &layer : c.layers) {
        for (const Gate &g : layer) EXPECT_EQ(g.a.c, g.b.c);
    }
}

TEST(StageCircuits, ChainReversalDepth) {
    Circuit c = chain_sort_circuit(Permutation::reversal(16), 4);
    EXPECT_LE(metrics(c).cnot_depth, 32);
}

TEST(StageCircuits, RowStageGatesStayInRowsAndAreAdjacent) {
    std::mt19937_64 rng(9);
    int L = 6;
    std::vector<Permutation> stage;
    for (int r = 0; r < L; r++) stage.push_back(random_permutation(L, rng));
    Circuit c = row_stage_circuit(stage, L);
    EXPECT_LE(c.layers.size(), static_cast<size_t>(L));
    for (const auto &layer : c.layers) {
        for (const Gate &g : layer) {
            EXPECT_EQ(g.a.r, g.b.r);
            EXPECT_TRUE(cells_adjacent(g.a, g.b));
        }
    }
}

TEST(StageCircuits, RelayoutMovesEveryCell) {
    std::mt19937_64 rng(4);
    int L = 5;
    std::vector<int> dest = random_permutation(L * L, rng).map();
    GateList g = relayout_gates(dest, L);
    std::vector<int> content(L * L);
    for (int i = 0; i < L * L; i++) content[i] = i;
    for (const Gate &x : g) {
        ASSERT_EQ(x.kind, GateKind::SWAP);
        std::swap(content[x.a.r * L + x.a.c], content[x.b.r * L + x.b.c]);
    }
    for (int i = 0; i < L * L; i++) EXPECT_EQ(content[dest[i]], i);
}

}  // namespace
}  // namespace fermroute

// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "fermroute/core.hpp"

namespace fermroute {
namespace {

TEST(SnakeIndex, Examples) {
    EXPECT_EQ(snake_index(0, 0, 4), 0);
    EXPECT_EQ(snake_index(1, 2, 4), 5);
    EXPECT_EQ(snake_index(2, 3, 4), 11);
}

TEST(SnakeIndex, OutOfRangeThrows) {
    EXPECT_THROW(snake_index(4, 0, 4), std::domain_error);
    EXPECT_THROW(snake_index(0, -1, 4), std::domain_error);
    EXPECT_THROW(snake_cell(16, 4), std::domain_error);
}

TEST(SnakeIndex, RoundTripExhaustive) {
    for (int L = 1; L <= 64; L++) {
        for (int r = 0; r < L; r++) {
            for (int c = 0; c < L; c++) ASSERT_EQ(snake_cell(snake_index(r, c, L), L), (Cell{r, c}));
        }
    }
}

TEST(SnakeIndex, NeighborDistances) {
    for (int L = 2; L <= 16; L++) {
        for (int r = 0; r < L; r++) {
            for (int c = 0; c + 1 < L; c++) EXPECT_EQ(std::abs(snake_index(r, c, L) - snake_index(r, c + 1, L)), 1);
        }
        for (int r = 0; r + 1 < L; r++) {
            for (int c = 0; c < L; c++) {
                int d = std::abs(snake_index(r, c, L) - snake_index(r + 1, c, L));
                EXPECT_EQ(d % 2, 1);
                EXPECT_LE((d - 1) / 2, L - 1);
            }
        }
    }
}

TEST(Permutation, RejectsNonBijection) {
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
}

TEST(Permutation, InversionSetExamples) {
    EXPECT_TRUE(inversion_set(Permutation::identity(5)).empty());
    EXPECT_EQ(inversion_set(Permutation({1, 0, 2})), (InversionSet{{0, 1}}));
    EXPECT_EQ(inversion_set(Permutation::reversal(3)), (InversionSet{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Permutation, InversionCountMatchesPairLoop) {
    std::mt19937_64 rng(7);
    for (int n : {0, 1, 2, 5, 17, 64, 200}) {
        for (int rep = 0; rep < 5; rep++) {
            Permutation p = random_permutation(n, rng);
            int64_t brute = 0;
            for (int i = 0; i < n; i++) {
                for (int j = i + 1; j < n; j++) brute += p(i) > p(j);
            }
            EXPECT_EQ(inversion_count(p), brute);
            EXPECT_EQ(static_cast<int64_t>(inversion_set(p).size()), brute);
        }
        EXPECT_EQ(inversion_count(Permutation::reversal(n)), int64_t{n} * (n - 1) / 2);
    }
}

TEST(Permutation, ComposeInvert) {
    Permutation p({2, 0, 3, 1});
    EXPECT_EQ(compose(p, Permutation::identity(4)), p);
    EXPECT_TRUE(compose(p, invert(p)).is_identity());
    EXPECT_EQ(compose(Permutation({1, 0, 2}), Permutation({0, 2, 1})), Permutation({1, 2, 0}));
    EXPECT_THROW(compose(p, Permutation::identity(3)), std::invalid_argument);
}

TEST(Permutation, TransposeIsInvolution) {
    for (int L = 1; L <= 9; L++) {
        Permutation t = transpose_permutation(L);
        EXPECT_TRUE(compose(t, t).is_identity());
        Cell d = snake_cell(t(snake_index(0, L - 1, L)), L);
        EXPECT_EQ(d, (Cell{L - 1, 0}));
    }
}

TEST(Seeds, DeriveSeedIsDeterministicAndSpreads) {
    EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
    EXPECT_NE(derive_seed(42, 3), derive_seed(42, 4));
    EXPECT_NE(derive_seed(42, 0), derive_seed(43, 0));
}

TEST(Hilbert, SmallOrders) {
    EXPECT_EQ(HilbertCurve(0).cell(0), (Cell{0, 0}));
    HilbertCurve h2(2);
    for (uint64_t i = 0; i + 1 < 4; i++) {
        Cell a = h2.cell(i), b = h2.cell(i + 1);
        EXPECT_EQ(std::abs(a.r - b.r) + std::abs(a.c - b.c), 1);
    }
    EXPECT_THROW(h2.cell(4), std::domain_error);
}

TEST(Hilbert, BijectionAndAdjacency) {
    for (int k = 0; k <= 12; k++) {
        HilbertCurve h(k);
        EXPECT_EQ(uint64_t(h.rows()) * h.cols(), h.size());
        std::vector<char> seen(h.size(), 0);
        for (uint64_t i = 0; i < h.size(); i++) {
            Cell c = h.cell(i);
            ASSERT_LT(c.r, h.rows());
            ASSERT_LT(c.c, h.cols());
            ASSERT_EQ(h.index(c), i);
            uint64_t lin = uint64_t(c.r) * h.cols() + c.c;
            ASSERT_FALSE(seen[lin]);
            seen[lin] = 1;
            if (i + 1 < h.size()) {
                Cell d = h.cell(i + 1);
                ASSERT_EQ(std::abs(c.r - d.r) + std::abs(c.c - d.c), 1) << "k=" << k << " i=" << i;
            }
        }
    }
}

TEST(Hilbert, DyadicIntervalsAreRectangles) {
    for (int k = 0; k <= 10; k++) {
        HilbertCurve h(k);
        for (int q = 0; q <= k; q++) {
            uint64_t len = uint64_t{1} << q;
            for (uint64_t start = 0; start < h.size(); start += len) {
                int r0 = 1 << 30, r1 = -1, c0 = 1 << 30, c1 = -1;
                for (uint64_t i = start; i < start + len; i++) {
                    Cell c = h.cell(i);
                    r0 = std::min(r0, c.r);
                    r1 = std::max(r1, c.r);
                    c0 = std::min(c0, c.c);
                    c1 = std::max(c1, c.c);
                }
                int hgt = r1 - r0 + 1, wid = c1 - c0 + 1;
                ASSERT_EQ(uint64_t(hgt) * wid, len);
                ASSERT_EQ(std::min(hgt, wid), 1 << (q / 2));
                ASSERT_EQ(std::max(hgt, wid), 1 << ((q + 1) / 2));
            }
        }
    }
}

TEST(Hilbert, FourCellIntervalAtOrderFour) {
    HilbertCurve h(4);
    int r1 = 0, c1 = 0;
    for (uint64_t i = 0; i < 4; i++) {
        r1 = std::max(r1, h.cell(i).r);
        c1 = std::max(c1, h.cell(i).c);
    }
    EXPECT_EQ(r1, 1);
    EXPECT_EQ(c1, 1);
}

}  // namespace
}  // namespace fermroute

// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "fermroute/gamma.hpp"
#include "fermroute/planner.hpp"
#include "fermroute/verify.hpp"

namespace fermroute {
namespace {

BitGrid random_grid(int L, std::mt19937_64 &rng) {
    BitGrid g(L);
    for (auto &b : g.s) b = rng() & 1;
    return g;
}

TEST(TriangularProduct, Examples) {
    EXPECT_EQ(T({0, 0, 0, 0}, {1, 0, 1, 1}), 0);
    EXPECT_EQ(T({1, 0, 1, 0}, {0, 1, 1, 1}), 0);
    EXPECT_THROW(T({1, 0}, {1}), std::invalid_argument);
}

TEST(TriangularProduct, FlipRule) {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 200; rep++) {
        int L = 1 + rng() % 10;
        BitRow x(L), y(L);
        for (int i = 0; i < L; i++) {
            x[i] = rng() & 1;
            y[i] = rng() & 1;
        }
        int c0 = rng() % L;
        BitRow x2 = x;
        x2[c0] ^= 1;
        int want = 0;
        for (int c = c0 + 1; c < L; c++) want ^= y[c];
        EXPECT_EQ(T(x, y) ^ T(x2, y), want);
    }
}

TEST(GammaOracle, Examples) {
    EXPECT_EQ(gamma_phase_oracle(BitGrid(4)), 0);
    BitGrid s(2);
    s.at(0, 0) = s.at(0, 1) = 1;
    EXPECT_EQ(f_B(s.suffix_parity()), 0);
    EXPECT_EQ(f_D(s), 1);
    EXPECT_EQ(gamma_phase_oracle(s), 1);
    for (int L = 2; L <= 6; L++) {
        for (int i = 0; i < L * L; i++) {
            BitGrid e(L);
            e.s[i] = 1;
            EXPECT_EQ(gamma_phase_oracle(e), 0);
        }
    }
}

TEST(PipeSweep, EmptyGadgetsCancel) {
    GateList g = pipe_sweep(0, {}, {}, 5);
    std::vector<uint8_t> bits(25);
    std::mt19937_64 rng(3);
    for (auto &b : bits) b = rng() & 1;
    PhaseState st = simulate_phase_circuit(g, 5, bits);
    EXPECT_EQ(st.bits, bits);
    EXPECT_EQ(st.phase, 0);
}

// Sweeps in isolation contribute T(x_r, x_r) + T(x_r, x_{r+1}) and T(x_r, x_r) + T(x_r, x_{r+2}).
TEST(PipeSweep, PairContributions) {
    std::mt19937_64 rng(8);
    int L = 7;
    GateList b = pipe_sweep(1, {{GadgetKind::Cross, -2}, {GadgetKind::Same, -3}},
                            {{GadgetKind::Cross, +2}, {GadgetKind::Z, +3}}, L);
    GateList a = pipe_sweep(2, {{GadgetKind::SkipMinus, -1}, {GadgetKind::Same, -5}},
                            {{GadgetKind::SkipPlus, +1}, {GadgetKind::Z, +5}}, L);
    for (int rep = 0; rep < 300; rep++) {
        BitGrid s = random_grid(L, rng);
        PhaseState sb = simulate_phase_circuit(b, L, s.s);
        EXPECT_EQ(sb.bits, s.s);
        EXPECT_EQ(sb.phase, 2 * (T(s.row(1), s.row(1)) ^ T(s.row(1), s.row(2))));
        PhaseState sa = simulate_phase_circuit(a, L, s.s);
        EXPECT_EQ(sa.bits, s.s);
        EXPECT_EQ(sa.phase, 2 * (T(s.row(2), s.row(2)) ^ T(s.row(2), s.row(4))));
    }
}

TEST(BuildGamma, MatchesOracleOnRandomStates) {
    std::mt19937_64 rng(21);
    for (int L = 2; L <= 16; L++) {
        GateList g = gamma_gates(L);
        for (int rep = 0; rep < 1000; rep++) {
            BitGrid s = random_grid(L, rng);
            PhaseState st = simulate_phase_circuit(g, L, s.s);
            ASSERT_EQ(st.bits, s.s);
            ASSERT_EQ(st.phase, 2 * gamma_phase_oracle(s)) << "L=" << L;
        }
    }
}

TEST(BuildGamma, ExhaustiveSmall) {
    for (int L : {2, 3}) {
        GateList g = gamma_gates(L);
        GateList gg = g;
        gg.insert(gg.end(), g.begin(), g.end());
        for (uint32_t m = 0; m < (1u << (L * L)); m++) {
            BitGrid s(L);
            for (int i = 0; i < L * L; i++) s.s[i] = (m >> i) & 1;
            PhaseState st = simulate_phase_circuit(g, L, s.s);
            ASSERT_EQ(st.bits, s.s);
            ASSERT_EQ(st.phase, 2 * gamma_phase_oracle(s));
            PhaseState sq = simulate_phase_circuit(gg, L, s.s);
            ASSERT_EQ(sq.bits, s.s);
            ASSERT_EQ(sq.phase, 0);
        }
    }
}

TEST(BuildGamma, DepthBound) {
    for (int L = 2; L <= 32; L++) {
        Metrics m = metrics(build_gamma(L));
        EXPECT_LE(m.cnot_depth, 8 * L + 10) << "L=" << L;
    }
    EXPECT_LE(metrics(build_gamma(4)).cnot_depth, 42);
}

TEST(BuildGamma, RejectsTinyGrid) { EXPECT_THROW(build_gamma(1), std::invalid_argument); }

TEST(BuildGamma, StatevectorIsDiagonalWithOraclePhases) {
    int L = 3;
    GateList g = gamma_gates(L);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> nd;
    Amplitudes psi(1 << 9);
    for (int i = 0; i < psi.size(); i++) psi[i] = {nd(rng), nd(rng)};
    Amplitudes out = statevector_simulate(g, L, L, psi);
    for (int i = 0; i < psi.size(); i++) {
        BitGrid s(L);
        for (int q = 0; q < 9; q++) s.s[q] = (i >> q) & 1;
        double sign = gamma_phase_oracle(s) ? -1.0 : 1.0;
        EXPECT_LT(std::abs(out[i] - sign * psi[i]), 1e-12);
    }
}

TEST(PhasePolynomial, CircuitPolynomialEqualsReference) {
    for (int L = 2; L <= 12; L++) {
        EXPECT_TRUE(extract_phase_polynomial(gamma_gates(L), L) == gamma_reference_polynomial(L)) << "L=" << L;
    }
}

TEST(PhasePolynomial, EvaluateMatchesOracle) {
    std::mt19937_64 rng(6);
    for (int L = 2; L <= 7; L++) {
        PhasePolynomial f = gamma_reference_polynomial(L);
        for (int rep = 0; rep < 100; rep++) {
            BitGrid s = random_grid(L, rng);
            EXPECT_EQ(f.evaluate(s.s), gamma_phase_oracle(s));
        }
    }
}

TEST(ParityEncoding, TwoByTwo) {
    PhasePolynomial f = gamma_reference_polynomial(2);
    // Flipping (0,0) and (1,0) together changes f by s_{0,1} + s_{1,1}, which is the parity string there.
    for (uint32_t m = 0; m < 16; m++) {
        BitGrid s(2);
        for (int i = 0; i < 4; i++) s.s[i] = (m >> i) & 1;
        BitGrid t = s;
        t.at(0, 0) ^= 1;
        t.at(1, 0) ^= 1;
        EXPECT_EQ(f.evaluate(s.s) ^ f.evaluate(t.s), s.at(0, 1) ^ s.at(1, 1));
    }
    for (const auto &p : check_parity_encoding(2)) EXPECT_TRUE(p.pass);
}

TEST(ParityEncoding, AllPairsUpToSixteen) {
    for (int L = 2; L <= 16; L++) {
        for (const auto &p : check_parity_encoding(L)) EXPECT_TRUE(p.pass) << "L=" << L << " pair " << p.r << "," << p.c;
    }
}

TEST(ParityEncoding, DetectsBrokenPolynomial) {
    PhasePolynomial f = gamma_reference_polynomial(3);
    AffineForm a = AffineForm::variable(9, 0), b = AffineForm::variable(9, 5);
    f.add_product(a, b);
    int failures = 0;
    for (const auto &p : check_parity_encoding(f, 3)) failures += !p.pass;
    EXPECT_GT(failures, 0);
}

// Gamma times a round of bare vertical FSWAPs times Gamma equals the full fermionic swaps.
TEST(Telescoping, BareRoundBecomesFull) {
    std::mt19937_64 rng(13);
    for (int L = 2; L <= 6; L++) {
        GateList g = gamma_gates(L);
        for (int parity = 0; parity < 2; parity++) {
            GateList circ = g;
            std::vector<std::pair<int, int>> pairs;  // JW index pairs
            for (int c = 0; c < L; c++) {
                for (int r = parity; r + 1 < L; r += 2) {
                    circ.push_back(Gate::fswap({r, c}, {r + 1, c}));
                    pairs.emplace_back(snake_index(r, c, L), snake_index(r + 1, c, L));
                }
            }
            circ.insert(circ.end(), g.begin(), g.end());
            std::vector<int> map(L * L);
            for (int i = 0; i < L * L; i++) map[i] = i;
            for (auto [j, k] : pairs) std::swap(map[j], map[k]);
            Permutation pi(map);
            for (int rep = 0; rep < 200; rep++) {
                std::vector<uint8_t> modes(L * L);
                for (auto &b : modes) b = rng() & 1;
                PhaseState want = fperm_oracle(pi, modes);
                PhaseState got = simulate_phase_circuit(circ, L, modes_to_qubits(modes, L));
                ASSERT_EQ(qubits_to_modes(got.bits, L), want.bits);
                ASSERT_EQ(got.phase, want.phase);
            }
        }
    }
}

}  // namespace
}  // namespace fermroute

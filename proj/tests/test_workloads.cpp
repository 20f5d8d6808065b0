// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "fermroute/workloads.hpp"

namespace fermroute {
namespace {

using cd = std::complex<double>;
constexpr double kTol = 1e-10;

const FfftVariant kVariants[] = {FfftVariant::GammaSandwich, FfftVariant::FpSandwich, FfftVariant::FswapBaseline};

cd amp(const SparseState &s, uint64_t key) {
    auto it = s.find(key);
    return it == s.end() ? cd(0) : it->second;
}

TEST(Ffft1d, TrivialSizes) {
    EXPECT_TRUE(build_ffft_1d_local(1).empty());
    EXPECT_THROW(build_ffft_1d_local(6), std::invalid_argument);
}

TEST(Ffft1d, TwoPointMatrix) {
    GateList g = build_ffft_1d_local(2);
    Eigen::MatrixXcd u = circuit_unitary(g, 1, 2);
    // basis index = bit0 (cell 0) + 2 bit1 (cell 1)
    double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(u(1, 1) - r), 0, kTol);
    EXPECT_NEAR(std::abs(u(2, 1) - r), 0, kTol);
    EXPECT_NEAR(std::abs(u(1, 2) - r), 0, kTol);
    EXPECT_NEAR(std::abs(u(2, 2) + r), 0, kTol);
    EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0, kTol);
    EXPECT_NEAR(std::abs(u(3, 3) + 1.0), 0, kTol);
}

TEST(Ffft1d, DftOnSingleExcitations) {
    for (int L : {4, 8, 16}) {
        GateList g = build_ffft_1d_local(L);
        for (int n = 0; n < L; n++) {
            SparseState out = sparse_simulate(g, L, {{uint64_t{1} << n, 1.0}});
            for (int k = 0; k < L; k++) {
                cd want = std::polar(1 / std::sqrt(L), -2 * std::numbers::pi * n * k / L);
                EXPECT_LT(std::abs(amp(out, uint64_t{1} << k) - want), kTol);
            }
            for (const auto &[key, a] : out) {
                if (std::popcount(key) != 1) EXPECT_LT(std::abs(a), kTol);
            }
        }
    }
}

TEST(Ffft2d, FullUnitaryAtTwo) {
    Eigen::MatrixXcd oracle = ffft_many_body_oracle(2);
    for (FfftVariant v : kVariants) {
        Eigen::MatrixXcd u = circuit_unitary(build_ffft_2d({2, v}), 2, 2);
        EXPECT_TRUE(equal_up_to_phase(u, oracle, kTol)) << variant_name(v);
        EXPECT_LT(std::abs(u(0, 0) - 1.0), kTol);
    }
}

TEST(Ffft2d, OracleIsTheDftOnOneParticle) {
    Eigen::MatrixXcd oracle = ffft_many_body_oracle(2);
    Eigen::MatrixXcd W = ffft_single_particle(2);
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            EXPECT_LT(std::abs(oracle(occupation_index({q}, 2), occupation_index({p}, 2)) - W(q, p)), kTol);
        }
    }
}

TEST(Ffft2d, SingleAndPairSectorsAtFour) {
    int L = 4, N = 16;
    Eigen::MatrixXcd W = ffft_single_particle(L);
    for (FfftVariant v : kVariants) {
        GateList g = build_ffft_2d({L, v});
        for (int p = 0; p < N; p++) {
            SparseState out = sparse_simulate(g, L, {{occupation_index({p}, L), 1.0}});
            for (int q = 0; q < N; q++) ASSERT_LT(std::abs(amp(out, occupation_index({q}, L)) - W(q, p)), kTol);
        }
        for (auto [p, pp] : {std::pair{0, 1}, {3, 12}, {7, 8}}) {
            SparseState out = sparse_simulate(g, L, {{occupation_index({p, pp}, L), 1.0}});
            for (int q = 0; q < N; q++) {
                for (int qq = q + 1; qq < N; qq++) {
                    cd want = W(q, p) * W(qq, pp) - W(qq, p) * W(q, pp);
                    ASSERT_LT(std::abs(amp(out, occupation_index({q, qq}, L)) - want), kTol);
                }
            }
        }
    }
}

TEST(Ffft2d, ColumnStagesAgreeAtTwo) {
    Eigen::MatrixXcd a = circuit_unitary(ffft_column_stage({2, FfftVariant::GammaSandwich}), 2, 2);
    Eigen::MatrixXcd b = circuit_unitary(ffft_column_stage({2, FfftVariant::FpSandwich}), 2, 2);
    EXPECT_TRUE(equal_up_to_phase(a, b, kTol));
}

TEST(Ffft2d, NearestNeighbourAndValidates) {
    for (FfftVariant v : kVariants) EXPECT_NO_THROW(schedule_greedy(build_ffft_2d({8, v}), 8, 8));
}

TEST(Ffft2d, GammaIsShallowestAtSixteen) {
    int g = metrics(build_ffft_2d({16, FfftVariant::GammaSandwich}), 16, 16).cnot_depth;
    int f = metrics(build_ffft_2d({16, FfftVariant::FpSandwich}), 16, 16).cnot_depth;
    int s = metrics(build_ffft_2d({16, FfftVariant::FswapBaseline}), 16, 16).cnot_depth;
    EXPECT_LT(g, f);
    EXPECT_LT(f, s);
}

TEST(Ffft2d, Errors) {
    EXPECT_THROW(build_ffft_2d({3, FfftVariant::GammaSandwich}), std::invalid_argument);
    EXPECT_THROW(variant_from_name("ct"), std::invalid_argument);
}

TEST(Syk, EmptyWhenSparsityZero) { EXPECT_TRUE(sample_syk_terms(10, 0.0, 1).terms.empty()); }

TEST(Syk, TermsAreValidAndDeterministic) {
    SykInstance a = sample_syk_terms(20, 1.0, 9), b = sample_syk_terms(20, 1.0, 9);
    EXPECT_EQ(a.terms, b.terms);
    for (size_t i = 0; i < a.terms.size(); i++) {
        const auto &q = a.terms[i].q;
        EXPECT_TRUE(q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] < 40);
        if (i) EXPECT_LT(a.terms[i - 1].q, q);
    }
}

TEST(Syk, MeanTermCount) {
    double sum = 0;
    int seeds = 200;
    for (int s = 0; s < seeds; s++) sum += sample_syk_terms(50, 1.0, s).terms.size();
    // Poisson-like count with mean 100: standard error of the mean is about 0.7.
    EXPECT_NEAR(sum / seeds, 100.0, 3.0);
}

TEST(Syk, CouplingVariance) {
    std::vector<double> J;
    for (int s = 0; J.size() < 100000; s++) {
        for (const auto &t : sample_syk_terms(10, 50.0, s).terms) J.push_back(t.J);
    }
    double m = 0, v = 0;
    for (double x : J) m += x;
    m /= J.size();
    for (double x : J) v += (x - m) * (x - m);
    v /= J.size() - 1;
    double want = 6.0 / 1000, se = want * std::sqrt(2.0 / J.size());
    EXPECT_NEAR(v, want, 3 * se);
}

TEST(Syk, Coloring) {
    std::vector<SykTerm> disjoint = {{{0, 1, 2, 3}, 1}, {{4, 5, 6, 7}, 1}};
    EXPECT_EQ(color_terms(disjoint).size(), 1u);
    std::vector<SykTerm> clash = {{{0, 2, 4, 6}, 1}, {{1, 9, 10, 12}, 1}};
    EXPECT_EQ(color_terms(clash).size(), 2u);
    SykInstance inst = sample_syk_terms(30, 1.0, 4);
    size_t total = 0;
    for (const auto &g : color_terms(inst.terms)) {
        total += g.size();
        std::vector<char> used(30, 0);
        for (const auto &t : g) {
            std::vector<int> modes;
            for (int x : t.q) {
                if (modes.empty() || modes.back() != x / 2) modes.push_back(x / 2);
            }
            for (int m : modes) {
                EXPECT_FALSE(used[m]);
                used[m] = 1;
            }
        }
    }
    EXPECT_EQ(total, inst.terms.size());
}

TEST(Syk, PackingMakesTermsContiguous) {
    SykInstance inst = sample_syk_terms(36, 1.0, 2);
    for (const auto &g : color_terms(inst.terms)) {
        Permutation pi = packing_permutation(g, 36);
        int next = 0;
        for (const auto &t : g) {
            std::vector<int> pos;
            for (int x : t.q) pos.push_back(pi(x / 2));
            int lo = *std::min_element(pos.begin(), pos.end()), hi = *std::max_element(pos.begin(), pos.end());
            EXPECT_EQ(lo, next);
            EXPECT_LE(hi - lo, 3);
            next = hi + 1;
        }
    }
}

TEST(Syk, SingleTermIsExact) {
    SykInstance inst{4, 1.0, 0, 0.1, {{{1, 2, 5, 6}, 0.8}}};
    TrotterStep st = build_trotter_step(inst);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    Amplitudes psi(16);
    for (int i = 0; i < 16; i++) psi[i] = {nd(rng), nd(rng)};
    EXPECT_LT((statevector_simulate(st.gates, 2, 2, psi) - syk_oracle_apply(inst, psi)).cwiseAbs().maxCoeff(), kTol);
}

TEST(Syk, TrotterStepMatchesProductOfExponentials) {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> nd;
    for (int rep = 0; rep < 5; rep++) {
        SykInstance inst = sample_syk_terms(4, 1.0, rep);
        inst.terms.clear();
        for (int t = 0; t < 3; t++) {
            std::vector<int> idx(8);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            std::array<int, 4> q{idx[0], idx[1], idx[2], idx[3]};
            std::sort(q.begin(), q.end());
            inst.terms.push_back({q, nd(rng)});
        }
        TrotterStep st = build_trotter_step(inst);
        for (int s = 0; s < 20; s++) {
            Amplitudes psi(16);
            for (int i = 0; i < 16; i++) psi[i] = {nd(rng), nd(rng)};
            EXPECT_LT((statevector_simulate(st.gates, 2, 2, psi) - syk_oracle_apply(inst, psi)).cwiseAbs().maxCoeff(), kTol);
        }
    }
}

TEST(Syk, NineModesOnThreeByThree) {
    SykInstance inst = sample_syk_terms(9, 2.0, 3);
    ASSERT_FALSE(inst.terms.empty());
    TrotterStep st = build_trotter_step(inst);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> nd;
    Amplitudes psi(512);
    for (int i = 0; i < 512; i++) psi[i] = {nd(rng), nd(rng)};
    EXPECT_LT((statevector_simulate(st.gates, 3, 3, psi) - syk_oracle_apply(inst, psi)).cwiseAbs().maxCoeff(), kTol);
}

TEST(Ffft2d, VerifyHelper) {
    for (FfftVariant v : kVariants) {
        for (int L : {2, 4, 8}) {
            OracleCheck r = verify_ffft({L, v});
            EXPECT_TRUE(r.pass(kTol)) << variant_name(v) << " L=" << L << " " << r.what << " " << r.max_error;
        }
    }
}

TEST(Syk, VerifyHelper) {
    OracleCheck r = verify_trotter_step(sample_syk_terms(16, 1.0, 5), 3, 1);
    EXPECT_EQ(r.checked, 3);
    EXPECT_TRUE(r.pass(kTol)) << r.max_error;
    EXPECT_THROW(verify_trotter_step(sample_syk_terms(25, 1.0, 5), 1, 1), std::invalid_argument);
}

TEST(Syk, Errors) {
    EXPECT_TRUE(build_trotter_step(SykInstance{10, 1.0, 0, 0.1, {}}).gates.empty());
    EXPECT_THROW(build_trotter_step(sample_syk_terms(10, 1.0, 1)), std::invalid_argument);
    EXPECT_THROW(sample_syk_terms(1, 1.0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace fermroute

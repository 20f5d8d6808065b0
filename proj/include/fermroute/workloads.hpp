// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fermroute/circuit.hpp"
#include "fermroute/core.hpp"
#include "fermroute/verify.hpp"

namespace fermroute {

// ---- fermionic FFT -----------------------------------------------------------------------------
// FFFT a_n^dag FFFT^dag = sum_k W_{kn} a_k^dag with W_{kn} = w^{nk}/sqrt(N), w = exp(-2 pi i/N),
// and FFFT|0...0> = |0...0>. On the L x L grid the DFT index of cell (r, c) is r*L + c; the mode
// itself sits at snake position jw(r, c).

enum class FfftVariant { FswapBaseline, FpSandwich, GammaSandwich };

const char *variant_name(FfftVariant v);
FfftVariant variant_from_name(const std::string &name);

struct FfftConfig {
    int L = 2;
    FfftVariant variant = FfftVariant::GammaSandwich;
};

// Radix-2 transform on a chain of JW-adjacent cells: position p carries input index p and ends
// up holding output index p. Butterflies are Z then GIVENS(pi/4), twiddles are PHASE gates, and
// FSWAP rounds move partners next to each other between levels. Gates on consecutive chain
// cells only. L must be a power of two.
GateList build_ffft_1d_local(const std::vector<Cell> &chain);
GateList build_ffft_1d_local(int L);  // chain along row 0 of a 1 x L grid

// Column FFFTs (per variant), twiddles, row FFFTs, final fermionic transpose.
GateList build_ffft_2d(const FfftConfig &cfg);
// The promoted column stage alone, for comparing variants.
GateList ffft_column_stage(const FfftConfig &cfg);

// Single-particle matrix indexed by snake position.
Eigen::MatrixXcd ffft_single_particle(int L);
// exp(i sum h_mn a_m^dag a_n) with h = -i log W on N = L^2 <= 12 modes, in the qubit basis of the grid.
Eigen::MatrixXcd ffft_many_body_oracle(int L);

// Basis index of a set of occupied snake positions.
uint64_t occupation_index(const std::vector<int> &positions, int L);

struct OracleCheck {
    std::string what;
    int64_t checked = 0;
    double max_error = 0.0;
    bool pass(double tol) const { return checked > 0 && max_error <= tol; }
};

// L = 2: full unitary against the many-body oracle, up to global phase. L <= 4: every single-excitation
// column and the two-excitation images of all pairs. Larger L: single-excitation columns only.
OracleCheck verify_ffft(const FfftConfig &cfg);

// ---- sparse SYK ----------------------------------------------------------------------------------

struct SykTerm {
    std::array<int, 4> q{};  // Majorana indices, strictly increasing, in [0, 2N)
    double J = 0.0;
    bool operator==(const SykTerm &) const = default;
};

struct SykInstance {
    int N = 0;
    double k = 1.0;
    uint64_t seed = 0;
    double dt = 0.1;
    std::vector<SykTerm> terms;
};

// Each quartet enters with probability k*2N/C(2N,4); J ~ Normal(0, 6/N^3).
SykInstance sample_syk_terms(int N, double k, uint64_t seed, double dt = 0.1);

// Lexicographic order, first-fit colour; two terms conflict when they share a mode (index / 2).
std::vector<std::vector<SykTerm>> color_terms(std::vector<SykTerm> terms);
// Sends each term's modes, in group order, to consecutive snake positions from 0; idle modes
// follow in increasing order.
Permutation packing_permutation(const std::vector<SykTerm> &group, int N);

struct TrotterStep {
    GateList gates;
    int fp_depth = 0;        // summed over the forward and inverse permutations of every group
    int rotation_depth = 0;  // summed over the rotation layers of every group
    int groups = 0;
};

// Per group: F_pi, basis change + CNOT ladder + RZ(2 s J dt) + unladder + basis change back,
// then F_{pi^-1}. Needs N = L^2.
TrotterStep build_trotter_step(const SykInstance &inst);

// exp(-i J dt gamma_i gamma_j gamma_k gamma_l) applied term by term in colouring order.
Amplitudes syk_oracle_apply(const SykInstance &inst, const Amplitudes &psi);

// Circuit against the oracle on `states` random complex vectors (N <= 16).
OracleCheck verify_trotter_step(const SykInstance &inst, int states, uint64_t seed);

}  // namespace fermroute

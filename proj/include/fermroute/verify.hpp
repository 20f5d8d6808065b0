// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fermroute/circuit.hpp"
#include "fermroute/core.hpp"

namespace fermroute {

// ---- dense statevector -------------------------------------------------------------------------
// Qubit q = r*cols + c is bit q of the basis index. Two-qubit matrices use index 2*bit(a) + bit(b).
// RZ(t) = diag(e^{-it/2}, e^{it/2}); PHASE(t) = diag(1, e^{it});
// GIVENS(t): |10> -> cos t |10> + sin t |01>, |01> -> -sin t |10> + cos t |01>.

using Amplitudes = Eigen::VectorXcd;

Eigen::MatrixXcd gate_matrix(const Gate &g);
constexpr int kMaxStatevectorQubits = 20;
Amplitudes statevector_simulate(const GateList &gates, int rows, int cols, const Amplitudes &init);
Eigen::MatrixXcd circuit_unitary(const GateList &gates, int rows, int cols);
bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tol);

// Sparse amplitudes keyed by basis index, for circuits that keep few basis states populated.
using SparseState = std::unordered_map<uint64_t, std::complex<double>>;
// Up to 64 qubits; amplitudes below `drop` are removed after each gate.
SparseState sparse_simulate(const GateList &gates, int cols, SparseState psi, double drop = 1e-15);

// ---- basis-state phase simulation ---------------------------------------------------------------

struct PhaseState {
    std::vector<uint8_t> bits;
    int phase = 0;  // exponent of i, mod 4
    bool operator==(const PhaseState &) const = default;
};

// Gates limited to {CNOT, CZ, Z, X, S, FSWAP, SWAP}; anything else throws std::invalid_argument.
// bits are indexed by linear qubit.
PhaseState simulate_phase_circuit(const GateList &gates, int cols, std::vector<uint8_t> bits);

// Bit-sliced variant: planes[q] holds qubit q for 64*words samples. The phase exponent comes back
// as two planes (hi, lo). Uses the dispatched SIMD kernels.
struct PhaseBatch {
    size_t words = 0;
    std::vector<std::vector<uint64_t>> planes;
    std::vector<uint64_t> hi, lo;
};
void simulate_phase_batch(const GateList &gates, int cols, PhaseBatch &batch);

// Content at mode i moves to pi(i); phase -1 per inversion pair with both modes occupied.
PhaseState fperm_oracle(const Permutation &pi, const std::vector<uint8_t> &s);

// Snake-ordered mode bits <-> row-major qubit bits on an L x L grid.
std::vector<uint8_t> modes_to_qubits(const std::vector<uint8_t> &modes, int L);
std::vector<uint8_t> qubits_to_modes(const std::vector<uint8_t> &qubits, int L);

// ---- Pauli strings and Clifford conjugation ---------------------------------------------------

// i^e * prod_q X_q^{x_q} Z_q^{z_q}
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(int n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool x(int q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z(int q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_x(int q, bool v);
    void set_z(int q, bool v);
    int phase() const { return e_ & 3; }
    void add_phase(int d) { e_ = (e_ + d) & 3; }
    bool operator==(const PauliString &o) const { return n_ == o.n_ && phase() == o.phase() && x_ == o.x_ && z_ == o.z_; }
    // Single-letter form with sign, e.g. "-iXYZI" (qubit 0 first).
    std::string str() const;

    PauliString operator*(const PauliString &o) const;
    bool commutes(const PauliString &o) const;

   private:
    int n_ = 0;
    int e_ = 0;
    std::vector<uint64_t> x_, z_;
};

// P psi on a dense state; qubit q is bit q of the index.
Amplitudes apply_pauli(const PauliString &p, const Amplitudes &psi);

// U P U^dagger for U the circuit. Gates limited to {CNOT, CZ, Z, X, H, S, FSWAP, SWAP}.
PauliString conjugate_pauli(const GateList &gates, int cols, PauliString p);

// gamma_{2j}, gamma_{2j+1} for j < n, where mode j sits on qubit qubit_of_mode[j].
std::vector<PauliString> jw_majoranas(const std::vector<int> &qubit_of_mode, int num_qubits);
// Snake layout on an L x L grid.
std::vector<PauliString> grid_jw_majoranas(int L);

struct MajoranaReport {
    int checked = 0;
    int failed = 0;
    std::string first_failure;
    bool pass() const { return failed == 0; }
};

// Checks F gamma_{2j+a} F^dagger = gamma_{2 pi(j)+a} with sign +1 for every Majorana.
MajoranaReport check_majorana_permutation(const GateList &gates, const Permutation &pi, int L);

// ---- fidelity --------------------------------------------------------------------------------

// Basis-state comparison of `gates` against fperm_oracle. Exhaustive when 2^N <= samples, otherwise
// `samples` uniformly random occupations drawn from mt19937_64(seed). Phases must match exactly.
MajoranaReport check_fperm_basis_states(const GateList &gates, const Permutation &pi, int L, int64_t samples,
                                        uint64_t seed);

double estimate_fidelity(const Metrics &m, double p2q);

}  // namespace fermroute

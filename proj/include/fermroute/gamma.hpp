// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "fermroute/circuit.hpp"

namespace fermroute {

using BitRow = std::vector<uint8_t>;

// Row-major L x L occupation bits.
struct BitGrid {
    int L = 0;
    std::vector<uint8_t> s;

    explicit BitGrid(int L_) : L(L_), s(L_ * L_, 0) {}
    uint8_t at(int r, int c) const { return (r < 0 || r >= L) ? 0 : s[r * L + c]; }
    uint8_t &at(int r, int c) { return s[r * L + c]; }
    BitRow row(int r) const;
    // Column-suffix parities: out(r,c) = XOR of s(r',c) over r' >= r.
    BitGrid suffix_parity() const;
};

// XOR over p < c of x_p y_c.
int T(const BitRow &x, const BitRow &y);
int f_D(const BitGrid &s);
int f_B(const BitGrid &st);
int gamma_phase_oracle(const BitGrid &s);

enum class GadgetKind { Same, Cross, SkipMinus, SkipPlus, Z };

struct GadgetSpec {
    GadgetKind kind;
    int offset;
};

// Gates of one gadget anchored at column c of a sweep on row r, clipped to the grid.
GateList gadget_gates(GadgetKind kind, int r, int c, int L);

// One time step per entry; empty steps are dropped. Throws std::logic_error if a step reuses a qubit.
std::vector<GateList> pipe_sweep_steps(int r, const std::vector<GadgetSpec> &fwd, const std::vector<GadgetSpec> &undo,
                                       int L);
GateList pipe_sweep(int r, const std::vector<GadgetSpec> &fwd, const std::vector<GadgetSpec> &undo, int L);

// The four-phase ancilla-free diagonal operator, as a program-ordered gate list.
GateList gamma_gates(int L);
Circuit build_gamma(int L);

// Affine GF(2) form over n variables.
struct AffineForm {
    std::vector<uint64_t> bits;
    uint8_t constant = 0;

    AffineForm() = default;
    explicit AffineForm(int n) : bits((n + 63) / 64, 0) {}
    static AffineForm variable(int n, int i);
    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void flip(int i) { bits[i >> 6] ^= uint64_t{1} << (i & 63); }
    AffineForm &operator^=(const AffineForm &o);
    bool operator==(const AffineForm &) const = default;
};

// Degree-2 polynomial over GF(2). Variables are row-major grid cells.
// Quadratic terms are accumulated as an arbitrary bit matrix M (term x_i x_j for every set M_ij)
// and brought to upper-triangular form by canonicalize().
class PhasePolynomial {
   public:
    explicit PhasePolynomial(int n);

    int num_vars() const { return n_; }
    void add_product(const AffineForm &a, const AffineForm &b);
    void add_affine(const AffineForm &a);
    void canonicalize();

    int evaluate(const std::vector<uint8_t> &s) const;
    // Canonical accessors.
    bool quad(int i, int j) const;
    bool lin(int i) const { return lin_.get(i); }
    uint8_t constant() const { return lin_.constant; }
    bool operator==(const PhasePolynomial &o) const;

   private:
    int n_;
    int words_;
    std::vector<uint64_t> m_;  // n_ rows of words_ words
    AffineForm lin_;
    bool canonical_ = true;
};

// f_B(s~) + f_D(s) built directly from the defining sums.
PhasePolynomial gamma_reference_polynomial(int L);
// Symbolic run of a circuit over {CNOT, CZ, Z, X, SWAP, FSWAP}. Throws std::logic_error if the circuit
// is not diagonal.
PhasePolynomial extract_phase_polynomial(const GateList &gates, int L);

struct ParityPairResult {
    int r = 0;
    int c = 0;
    bool pass = false;
};

// Checks f(s) + f(s') = P for every vertical pair (r,c)-(r+1,c), with s' the swap of the two sites.
std::vector<ParityPairResult> check_parity_encoding(const PhasePolynomial &f, int L);
std::vector<ParityPairResult> check_parity_encoding(int L);

}  // namespace fermroute

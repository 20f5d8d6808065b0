// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fermroute/core.hpp"

namespace fermroute {

enum class GateKind : uint8_t { CNOT, CZ, Z, X, H, S, RZ, FSWAP, SWAP, GIVENS, PHASE };

const char *gate_name(GateKind k);
GateKind gate_kind_from_name(const std::string &name);
int gate_arity(GateKind k);

// For CNOT, a is the control and b the target.
struct Gate {
    GateKind kind = GateKind::Z;
    Cell a;
    Cell b{-1, -1};
    double theta = 0.0;

    int arity() const { return gate_arity(kind); }
    bool operator==(const Gate &) const = default;

    static Gate cnot(Cell c, Cell t) { return {GateKind::CNOT, c, t}; }
    static Gate cz(Cell a, Cell b) { return {GateKind::CZ, a, b}; }
    static Gate fswap(Cell a, Cell b) { return {GateKind::FSWAP, a, b}; }
    static Gate swap(Cell a, Cell b) { return {GateKind::SWAP, a, b}; }
    static Gate givens(Cell a, Cell b, double th) { return {GateKind::GIVENS, a, b, th}; }
    static Gate z(Cell q) { return {GateKind::Z, q}; }
    static Gate x(Cell q) { return {GateKind::X, q}; }
    static Gate h(Cell q) { return {GateKind::H, q}; }
    static Gate s(Cell q) { return {GateKind::S, q}; }
    static Gate rz(Cell q, double th) { return {GateKind::RZ, q, {-1, -1}, th}; }
    static Gate phase(Cell q, double th) { return {GateKind::PHASE, q, {-1, -1}, th}; }
};

using GateList = std::vector<Gate>;

// Gates in a layer act on pairwise disjoint qubits. Qubit (r,c) has linear index r*cols + c.
class Circuit {
   public:
    Circuit() = default;
    Circuit(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_qubits() const { return rows_ * cols_; }
    int qubit(Cell c) const { return c.r * cols_ + c.c; }
    Cell cell(int q) const { return {q / cols_, q % cols_}; }

    int extra_ancilla_columns = 0;
    std::vector<std::vector<Gate>> layers;
    std::map<std::string, std::string> metadata;

    // Layers concatenated in order.
    GateList gates() const;
    size_t gate_count() const;
    // Throws std::logic_error on overlap, out-of-range qubits, non-adjacent pairs or bad angles.
    void validate() const;

   private:
    int rows_ = 0;
    int cols_ = 0;
};

bool cells_adjacent(Cell a, Cell b);

// ASAP layering in program order. Every gate, one- or two-qubit, takes a slot on its qubits.
Circuit schedule_greedy(const GateList &gates, int rows, int cols);

// Lowers to {CNOT, Z, X, H, S, RZ, PHASE}. S-dagger is emitted as Z followed by S.
GateList decompose_to_cnot(const GateList &gates);
Circuit decompose_to_cnot(const Circuit &c);

// Adjoint in reverse order.
GateList inverse(const GateList &gates);

struct Metrics {
    int cnot_depth = 0;
    int64_t gates = 0;
    int64_t idle = 0;
    int qubits = 0;
    int64_t spacetime = 0;
};

// Entangling layer (1-based) of every two-qubit gate of a CNOT-level list, 0 for single-qubit gates.
// Single-qubit gates neither add depth nor block.
std::vector<int> entangling_layers(const GateList &compiled, int cols, int *depth = nullptr);

Metrics metrics(const Circuit &c);
Metrics metrics(const GateList &gates, int rows, int cols);

}  // namespace fermroute

// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "fermroute/circuit.hpp"
#include "fermroute/core.hpp"
#include "fermroute/verify.hpp"

namespace fermroute {

enum class Encoding { JW, BK, Parity };

const char *encoding_name(Encoding e);
Encoding encoding_from_name(const std::string &name);

// Binary-shaped ternary tree. Node labels are inorder positions 0..N-1; the middle child of
// every node is a leaf. left/right hold a child label or -1 for a leaf.
struct TernaryTree {
    int root = -1;
    std::vector<int> left, right;

    int size() const { return static_cast<int>(left.size()); }
    // Throws std::invalid_argument unless every node is reached once and labels are inorder.
    void validate() const;

    static TernaryTree jordan_wigner(int n);  // right spine
    static TernaryTree parity(int n);         // left spine
    static TernaryTree bravyi_kitaev(int n);  // balanced, median root
    static TernaryTree of(Encoding e, int n);
};

// Leaves left to right; X, Y, Z for the left, middle, right branch; the last of the 2N+1 leaves
// is dropped. Node i acts on qubit qubit_of_node[i].
std::vector<PauliString> majorana_strings(const TernaryTree &t, const std::vector<int> &qubit_of_node, int num_qubits);
std::vector<PauliString> majorana_strings(const TernaryTree &t);

struct Interval {
    int lo = 0;
    int hi = 0;
    int length() const { return hi - lo + 1; }
    bool operator==(const Interval &) const = default;
};

// One CNOT; the interval is [control, target] or [target, control].
struct Rotation {
    int control = 0;
    int target = 0;
    Interval span;
    Interval container;
};

struct RoundPlan {
    int k = 0;
    std::vector<std::vector<Rotation>> rounds;
};

// N = 2^k - 1 modes, k >= 2. BK->JW fires rounds r = 1..k-1; Parity->BK mirrors the family on
// the inorder line and fires it from r = k-1 down to 1. Containers of BK->JW rounds are the
// dyadic translates; Parity->BK containers are the span itself (mirrored intervals are not
// aligned), routed inside its bounding box.
RoundPlan bk_to_jw_rounds(int k);
RoundPlan parity_to_bk_rounds(int k);

// The intervals I_{d,r} paired with their dyadic containers, inside [0, 2^d - 1].
std::vector<std::pair<Interval, Interval>> local_intervals(int d, int r);

// Rectangle covered by the Hilbert images of [lo, hi]. Exact for dyadic intervals.
struct Rect {
    int r0, c0, r1, c1;  // inclusive
    bool contains(Cell c) const { return c.r >= r0 && c.r <= r1 && c.c >= c0 && c.c <= c1; }
};
Rect hilbert_bounding_box(const HilbertCurve &h, Interval iv);

// SWAP chains along an L-shaped path (row first) inside the container rectangle, the CNOT,
// then the unwinding SWAPs. Throws std::logic_error if a path leaves its rectangle.
GateList route_round_on_hilbert(const std::vector<Rotation> &round, const HilbertCurve &h);

// Qubit i sits at Hilbert cell H(i) on a rows x cols grid (cell 2^k - 1 unused).
struct EncodedLayout {
    int k = 0;
    int rows = 0;
    int cols = 0;
    std::vector<int> qubit_of_mode;  // linear qubit for each of the 2^k - 1 modes
};
EncodedLayout hilbert_layout(int k);

// Circuit C with C gamma_src C^dag = gamma_JW for every Majorana. src == JW gives an empty list.
GateList convert_encoding_circuit(Encoding src, int k);

// Plain SWAP relayout for even k: the qubit at H(i) moves to snake cell i on L = 2^{k/2}.
GateList hilbert_to_snake_relayout(int k);

// Four-step pipeline for even k on L = 2^{k/2}: convert to JW, relayout Hilbert -> snake,
// ancilla-free fermionic permutation (mode N = L^2 - 1 stays put), relayout back, convert back.
GateList fperm_under_encoding(const Permutation &pi, Encoding e, int k);

// Conjugates `from` through the gates and compares with `to` (sign included).
MajoranaReport check_string_map(const GateList &gates, int cols, const std::vector<PauliString> &from,
                                const std::vector<PauliString> &to);

// Fitted on BK->JW for k in 4..12 (measured maxima 4.35 and 6.32): CNOT depth of round r is at
// most c*sqrt(2^{k-1-r}+1) and the whole conversion at most C*2^{k/2}. Parity->JW measures 12.4.
constexpr double kRoundDepthConstant = 4.4;
constexpr double kTotalDepthConstant = 6.4;
constexpr double kParityTotalDepthConstant = 12.5;

}  // namespace fermroute

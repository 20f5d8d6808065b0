// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <stdexcept>

#include "fermroute/circuit.hpp"
#include "fermroute/circuit_io.hpp"
#include "fermroute/verify.hpp"

namespace fermroute {
namespace {

TEST(Schedule, DisjointGatesShareALayer) {
    Circuit c = schedule_greedy({Gate::cnot({0, 0}, {0, 1}), Gate::cnot({1, 0}, {1, 1})}, 2, 2);
    EXPECT_EQ(c.layers.size(), 1u);
}

TEST(Schedule, SharedQubitForcesNewLayer) {
    Circuit c = schedule_greedy({Gate::cnot({0, 0}, {0, 1}), Gate::cnot({0, 1}, {1, 1})}, 2, 2);
    EXPECT_EQ(c.layers.size(), 2u);
}

TEST(Schedule, RejectsNonAdjacentPair) {
    EXPECT_THROW(schedule_greedy({Gate::cnot({0, 0}, {1, 1})}, 2, 2), std::logic_error);
    EXPECT_THROW(schedule_greedy({Gate::cnot({0, 0}, {0, 2})}, 2, 2), std::logic_error);
}

TEST(Metrics, EmptyCircuit) {
    Metrics m = metrics(Circuit(2, 2));
    EXPECT_EQ(m.cnot_depth, 0);
    EXPECT_EQ(m.gates, 0);
    EXPECT_EQ(m.idle, 0);
}

TEST(Metrics, SingleCnotOnTwoByTwo) {
    Metrics m = metrics(schedule_greedy({Gate::cnot({0, 0}, {0, 1})}, 2, 2));
    EXPECT_EQ(m.cnot_depth, 1);
    EXPECT_EQ(m.gates, 1);
    EXPECT_EQ(m.idle, 2);
    EXPECT_EQ(m.qubits, 4);
    EXPECT_EQ(m.spacetime, 4);
}

TEST(Metrics, PerGateDepths) {
    auto depth = [](Gate g) { return metrics(GateList{g}, 1, 2).cnot_depth; };
    EXPECT_EQ(depth(Gate::fswap({0, 0}, {0, 1})), 2);
    EXPECT_EQ(depth(Gate::cz({0, 0}, {0, 1})), 1);
    EXPECT_EQ(depth(Gate::swap({0, 0}, {0, 1})), 3);
    EXPECT_EQ(depth(Gate::givens({0, 0}, {0, 1}, 0.3)), 2);
    EXPECT_EQ(depth(Gate::rz({0, 0}, 0.3)), 0);
}

TEST(Metrics, SingleQubitGatesDoNotBlock) {
    GateList g = {Gate::cnot({0, 0}, {0, 1}), Gate::h({0, 1}), Gate::s({0, 1}), Gate::cnot({0, 1}, {0, 2})};
    EXPECT_EQ(metrics(g, 1, 3).cnot_depth, 2);
    GateList par = {Gate::cnot({0, 0}, {0, 1}), Gate::h({0, 2}), Gate::cnot({0, 2}, {0, 3})};
    EXPECT_EQ(metrics(par, 1, 4).cnot_depth, 1);
}

// Every lowering must reproduce the gate's own matrix up to a global phase.
TEST(Decompose, MatchesGateMatrices) {
    const Cell a{0, 0}, b{0, 1};
    std::vector<Gate> cases = {Gate::cnot(a, b), Gate::cnot(b, a),       Gate::cz(a, b),
                               Gate::swap(a, b), Gate::fswap(a, b),      Gate::givens(a, b, 0.37),
                               Gate::givens(a, b, -1.9), Gate::rz(a, 0.8), Gate::phase(b, 1.1),
                               Gate::s(a),       Gate::h(b),             Gate::x(a),
                               Gate::z(b)};
    for (const Gate &g : cases) {
        auto want = circuit_unitary({g}, 1, 2);
        auto got = circuit_unitary(decompose_to_cnot(GateList{g}), 1, 2);
        EXPECT_TRUE(equal_up_to_phase(want, got, 1e-12)) << gate_name(g.kind);
    }
}

TEST(Decompose, InverseUndoes) {
    const Cell a{0, 0}, b{0, 1};
    GateList g = {Gate::fswap(a, b), Gate::givens(a, b, 0.4), Gate::s(a), Gate::rz(b, 0.2), Gate::phase(a, -0.3),
                  Gate::cnot(b, a)};
    GateList both = g;
    GateList inv = inverse(g);
    both.insert(both.end(), inv.begin(), inv.end());
    auto u = circuit_unitary(both, 1, 2);
    EXPECT_TRUE(u.isApprox(decltype(u)::Identity(4, 4), 1e-12));
}

TEST(Metrics, DepthIsSubadditiveUnderConcatenation) {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; rep++) {
        GateList a, b;
        for (int i = 0; i < 20; i++) {
            int r = rng() % 3, c = rng() % 2;
            Gate g = Gate::fswap({r, c}, {r, c + 1});
            if (rng() % 2) g = Gate::cz({r % 2, c}, {r % 2 + 1, c});
            (i < 10 ? a : b).push_back(g);
        }
        GateList ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        EXPECT_LE(metrics(ab, 3, 3).cnot_depth, metrics(a, 3, 3).cnot_depth + metrics(b, 3, 3).cnot_depth);
    }
}

TEST(GateNames, RoundTrip) {
    for (GateKind k : {GateKind::CNOT, GateKind::CZ, GateKind::Z, GateKind::X, GateKind::H, GateKind::S, GateKind::RZ,
                       GateKind::FSWAP, GateKind::SWAP, GateKind::GIVENS, GateKind::PHASE}) {
        EXPECT_EQ(gate_kind_from_name(gate_name(k)), k);
    }
    EXPECT_THROW(gate_kind_from_name("TOFFOLI"), std::invalid_argument);
}

TEST(Json, RoundTripIsExact) {
    GateList g = {Gate::cnot({0, 0}, {0, 1}), Gate::rz({1, 1}, 0.1 + 1e-17), Gate::givens({1, 0}, {1, 1}, -2.0 / 3.0),
                  Gate::phase({0, 1}, 3.141592653589793), Gate::fswap({0, 0}, {1, 0}), Gate::h({1, 1})};
    Circuit c = schedule_greedy(g, 2, 3);
    c.extra_ancilla_columns = 1;
    c.metadata["method"] = "ours";
    Circuit back = circuit_from_json(circuit_to_json(c));
    EXPECT_EQ(back.rows(), 2);
    EXPECT_EQ(back.cols(), 3);
    EXPECT_EQ(back.extra_ancilla_columns, 1);
    EXPECT_EQ(back.layers, c.layers);
    EXPECT_EQ(back.metadata, c.metadata);
    EXPECT_EQ(circuit_to_json(back), circuit_to_json(c));
}

TEST(Json, RejectsBadInput) {
    EXPECT_THROW(circuit_from_json("{"), std::invalid_argument);
    EXPECT_THROW(circuit_from_json(R"({"version":2,"L":2,"layers":[]})"), std::invalid_argument);
    EXPECT_THROW(circuit_from_json(R"({"version":1,"L":2,"layers":[[{"g":"CNOT","q":[[0,0]]}]]})"),
                 std::invalid_argument);
    EXPECT_THROW(circuit_from_json(R"({"version":1,"L":2,"layers":[[{"g":"CNOT","q":[[0,0],[1,1]]}]]})"),
                 std::invalid_argument);
    EXPECT_NO_THROW(circuit_from_json(R"({"version":1,"L":2,"extra_ancilla_columns":0,"layers":[]})"));
}

}  // namespace
}  // namespace fermroute

// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fermroute {

namespace {

struct NameEntry {
    GateKind kind;
    const char *name;
    int arity;
};

constexpr NameEntry kNames[] = {
    {GateKind::CNOT, "CNOT", 2},   {GateKind::CZ, "CZ", 2},       {GateKind::Z, "Z", 1},
    {GateKind::X, "X", 1},         {GateKind::H, "H", 1},         {GateKind::S, "S", 1},
    {GateKind::RZ, "RZ", 1},       {GateKind::FSWAP, "FSWAP", 2}, {GateKind::SWAP, "SWAP", 2},
    {GateKind::GIVENS, "GIVENS", 2}, {GateKind::PHASE, "PHASE", 1},
};

bool has_angle(GateKind k) { return k == GateKind::RZ || k == GateKind::GIVENS || k == GateKind::PHASE; }

}  // namespace

const char *gate_name(GateKind k) { return kNames[static_cast<int>(k)].name; }

int gate_arity(GateKind k) { return kNames[static_cast<int>(k)].arity; }

GateKind gate_kind_from_name(const std::string &name) {
    for (const auto &e : kNames) {
        if (name == e.name) return e.kind;
    }
    throw std::invalid_argument("unknown gate kind: " + name);
}

bool cells_adjacent(Cell a, Cell b) { return std::abs(a.r - b.r) + std::abs(a.c - b.c) == 1; }

GateList Circuit::gates() const {
    GateList out;
    out.reserve(gate_count());
    for (const auto &layer : layers) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

size_t Circuit::gate_count() const {
    size_t n = 0;
    for (const auto &layer : layers) n += layer.size();
    return n;
}

void Circuit::validate() const {
    auto in_range = [&](Cell c) { return c.r >= 0 && c.c >= 0 && c.r < rows_ && c.c < cols_; };
    std::vector<int> stamp(num_qubits(), -1);
    for (size_t li = 0; li < layers.size(); li++) {
        for (const Gate &g : layers[li]) {
            if (!in_range(g.a)) throw std::logic_error("gate qubit out of range");
            if (has_angle(g.kind) && !std::isfinite(g.theta)) throw std::logic_error("non-finite angle");
            int qa = qubit(g.a);
            if (stamp[qa] == static_cast<int>(li)) throw std::logic_error("overlapping gates in a layer");
            stamp[qa] = static_cast<int>(li);
            if (g.arity() == 2) {
                if (!in_range(g.b)) throw std::logic_error("gate qubit out of range");
                if (!cells_adjacent(g.a, g.b)) throw std::logic_error("two-qubit gate on non-adjacent cells");
                int qb = qubit(g.b);
                if (stamp[qb] == static_cast<int>(li)) throw std::logic_error("overlapping gates in a layer");
                stamp[qb] = static_cast<int>(li);
            }
        }
    }
}

Circuit schedule_greedy(const GateList &gates, int rows, int cols) {
    Circuit c(rows, cols);
    std::vector<int> next(rows * cols, 0);
    for (const Gate &g : gates) {
        int qa = c.qubit(g.a);
        int t = next[qa];
        int qb = -1;
        if (g.arity() == 2) {
            qb = c.qubit(g.b);
            t = std::max(t, next[qb]);
        }
        if (t >= static_cast<int>(c.layers.size())) c.layers.resize(t + 1);
        c.layers[t].push_back(g);
        next[qa] = t + 1;
        if (qb >= 0) next[qb] = t + 1;
    }
    c.validate();
    return c;
}

GateList decompose_to_cnot(const GateList &gates) {
    GateList out;
    out.reserve(gates.size() * 4);
    auto sdg = [&](Cell q) {
        out.push_back(Gate::z(q));
        out.push_back(Gate::s(q));
    };
    for (const Gate &g : gates) {
        Cell a = g.a, b = g.b;
        switch (g.kind) {
            case GateKind::CNOT:
            case GateKind::Z:
            case GateKind::X:
            case GateKind::H:
            case GateKind::S:
            case GateKind::RZ:
            case GateKind::PHASE:
                out.push_back(g);
                break;
            case GateKind::CZ:
                out.push_back(Gate::h(b));
                out.push_back(Gate::cnot(a, b));
                out.push_back(Gate::h(b));
                break;
            case GateKind::SWAP:
                out.push_back(Gate::cnot(a, b));
                out.push_back(Gate::cnot(b, a));
                out.push_back(Gate::cnot(a, b));
                break;
            case GateKind::FSWAP:
                // iSWAP (two CNOTs) times S-dagger on both qubits.
                sdg(a);
                sdg(b);
                out.push_back(Gate::h(b));
                out.push_back(Gate::cnot(b, a));
                out.push_back(Gate::cnot(a, b));
                out.push_back(Gate::h(a));
                out.push_back(Gate::s(a));
                out.push_back(Gate::s(b));
                break;
            case GateKind::GIVENS: {
                out.push_back(Gate::h(a));
                out.push_back(Gate::cnot(a, b));
                for (Cell q : {a, b}) {
                    sdg(q);
                    out.push_back(Gate::h(q));
                    out.push_back(Gate::rz(q, g.theta));
                    out.push_back(Gate::h(q));
                    out.push_back(Gate::s(q));
                }
                out.push_back(Gate::cnot(a, b));
                out.push_back(Gate::h(a));
                break;
            }
        }
    }
    return out;
}

Circuit decompose_to_cnot(const Circuit &c) {
    Circuit out = schedule_greedy(decompose_to_cnot(c.gates()), c.rows(), c.cols());
    out.extra_ancilla_columns = c.extra_ancilla_columns;
    out.metadata = c.metadata;
    return out;
}

GateList inverse(const GateList &gates) {
    GateList out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::S:
                out.push_back(Gate::z(g.a));
                out.push_back(g);
                break;
            case GateKind::RZ:
            case GateKind::GIVENS:
            case GateKind::PHASE:
                g.theta = -g.theta;
                out.push_back(g);
                break;
            default:
                out.push_back(g);
        }
    }
    return out;
}

std::vector<int> entangling_layers(const GateList &compiled, int cols, int *depth) {
    std::vector<int> layer(compiled.size(), 0);
    std::vector<int> busy;
    int d = 0;
    for (size_t i = 0; i < compiled.size(); i++) {
        const Gate &g = compiled[i];
        if (g.arity() != 2) continue;
        if (g.kind != GateKind::CNOT) throw std::invalid_argument("entangling_layers expects a CNOT-level circuit");
        int qa = g.a.r * cols + g.a.c;
        int qb = g.b.r * cols + g.b.c;
        int m = std::max(qa, qb);
        if (m >= static_cast<int>(busy.size())) busy.resize(m + 1, 0);
        int t = std::max(busy[qa], busy[qb]) + 1;
        busy[qa] = busy[qb] = t;
        layer[i] = t;
        d = std::max(d, t);
    }
    if (depth) *depth = d;
    return layer;
}

Metrics metrics(const GateList &gates, int rows, int cols) {
    GateList compiled = decompose_to_cnot(gates);
    Metrics m;
    entangling_layers(compiled, cols, &m.cnot_depth);
    for (const Gate &g : compiled) m.gates += g.arity() == 2;
    m.qubits = rows * cols;
    m.spacetime = static_cast<int64_t>(m.qubits) * m.cnot_depth;
    // Each CNOT occupies two of the Q slots in its layer.
    m.idle = m.spacetime - 2 * m.gates;
    return m;
}

Metrics metrics(const Circuit &c) { return metrics(c.gates(), c.rows(), c.cols()); }

}  // namespace fermroute

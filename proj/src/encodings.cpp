// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/encodings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fermroute/fperm.hpp"
#include "fermroute/planner.hpp"

namespace fermroute {

const char *encoding_name(Encoding e) {
    switch (e) {
        case Encoding::JW:
            return "jw";
        case Encoding::BK:
            return "bk";
        case Encoding::Parity:
            return "parity";
    }
    return "?";
}

Encoding encoding_from_name(const std::string &name) {
    if (name == "jw") return Encoding::JW;
    if (name == "bk") return Encoding::BK;
    if (name == "parity") return Encoding::Parity;
    throw std::invalid_argument("unknown encoding: " + name);
}

// ---- trees -------------------------------------------------------------------------------------

void TernaryTree::validate() const {
    int n = size();
    if (static_cast<int>(right.size()) != n || n == 0 || root < 0 || root >= n) {
        throw std::invalid_argument("TernaryTree: malformed arrays");
    }
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::function<void(int)> walk = [&](int v) {
        if (v < 0) return;
        if (v >= n || seen[v]) throw std::invalid_argument("TernaryTree: not a tree");
        seen[v] = 1;
        walk(left[v]);
        order.push_back(v);
        walk(right[v]);
    };
    walk(root);
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("TernaryTree: unreachable nodes");
    for (int i = 0; i < n; i++) {
        if (order[i] != i) throw std::invalid_argument("TernaryTree: labels are not inorder");
    }
}

TernaryTree TernaryTree::jordan_wigner(int n) {
    TernaryTree t;
    t.root = 0;
    t.left.assign(n, -1);
    t.right.assign(n, -1);
    for (int i = 0; i + 1 < n; i++) t.right[i] = i + 1;
    return t;
}

TernaryTree TernaryTree::parity(int n) {
    TernaryTree t;
    t.root = n - 1;
    t.left.assign(n, -1);
    t.right.assign(n, -1);
    for (int i = 1; i < n; i++) t.left[i] = i - 1;
    return t;
}

TernaryTree TernaryTree::bravyi_kitaev(int n) {
    TernaryTree t;
    t.left.assign(n, -1);
    t.right.assign(n, -1);
    std::function<int(int, int)> build = [&](int lo, int hi) {
        if (lo > hi) return -1;
        int m = lo + (hi - lo) / 2;
        t.left[m] = build(lo, m - 1);
        t.right[m] = build(m + 1, hi);
        return m;
    };
    t.root = build(0, n - 1);
    return t;
}

TernaryTree TernaryTree::of(Encoding e, int n) {
    if (n < 1) throw std::invalid_argument("TernaryTree: need at least one mode");
    switch (e) {
        case Encoding::JW:
            return jordan_wigner(n);
        case Encoding::BK:
            return bravyi_kitaev(n);
        case Encoding::Parity:
            return parity(n);
    }
    throw std::invalid_argument("TernaryTree: bad encoding");
}

std::vector<PauliString> majorana_strings(const TernaryTree &t, const std::vector<int> &qubit_of_node, int num_qubits) {
    t.validate();
    int n = t.size();
    if (static_cast<int>(qubit_of_node.size()) != n) throw std::invalid_argument("majorana_strings: size mismatch");
    std::vector<PauliString> out;
    out.reserve(2 * n + 1);
    // letter 1, 2, 3 = X, Y, Z
    auto with = [&](PauliString p, int v, int letter) {
        int q = qubit_of_node[v];
        if (letter != 3) p.set_x(q, true);
        if (letter != 1) p.set_z(q, true);
        if (letter == 2) p.add_phase(1);
        return p;
    };
    std::function<void(int, const PauliString &)> walk = [&](int v, const PauliString &path) {
        if (t.left[v] >= 0) {
            walk(t.left[v], with(path, v, 1));
        } else {
            out.push_back(with(path, v, 1));
        }
        out.push_back(with(path, v, 2));
        if (t.right[v] >= 0) {
            walk(t.right[v], with(path, v, 3));
        } else {
            out.push_back(with(path, v, 3));
        }
    };
    walk(t.root, PauliString(num_qubits));
    out.pop_back();
    return out;
}

std::vector<PauliString> majorana_strings(const TernaryTree &t) {
    std::vector<int> q(t.size());
    for (int i = 0; i < t.size(); i++) q[i] = i;
    return majorana_strings(t, q, t.size());
}

// ---- rounds --------------------------------------------------------------------------------------

static int check_k(int k) {
    if (k < 2 || k > 24) throw std::invalid_argument("encoding conversion needs N = 2^k - 1 with 2 <= k <= 24");
    return (1 << k) - 1;
}

std::vector<std::pair<Interval, Interval>> local_intervals(int d, int r) {
    if (d < 1 || r < 1 || r > d) throw std::invalid_argument("local_intervals: need 1 <= r <= d");
    if (r == 1) return {{{(1 << (d - 1)) - 1, (1 << d) - 1}, {0, (1 << d) - 1}}};
    auto half = local_intervals(d - 1, r - 1);
    auto out = half;
    int t = 1 << (d - 1);
    for (auto [j, c] : half) out.push_back({{j.lo + t, j.hi + t}, {c.lo + t, c.hi + t}});
    return out;
}

RoundPlan bk_to_jw_rounds(int k) {
    check_k(k);
    RoundPlan plan;
    plan.k = k;
    for (int r = 1; r <= k - 1; r++) {
        std::vector<Rotation> round;
        for (int i = 0; i <= k - 1 - r; i++) {
            int beta = i == 0 ? 0 : (1 << k) - (1 << (k - i));
            for (auto [j, c] : local_intervals(k - 1 - i, r)) {
                Interval span{j.lo + beta, j.hi + beta};
                round.push_back({span.lo, span.hi, span, {c.lo + beta, c.hi + beta}});
            }
        }
        plan.rounds.push_back(std::move(round));
    }
    return plan;
}

RoundPlan parity_to_bk_rounds(int k) {
    int n = check_k(k);
    RoundPlan bk = bk_to_jw_rounds(k);
    RoundPlan plan;
    plan.k = k;
    for (int r = k - 1; r >= 1; r--) {
        std::vector<Rotation> round;
        for (const Rotation &g : bk.rounds[r - 1]) {
            Interval span{n - 1 - g.span.hi, n - 1 - g.span.lo};
            round.push_back({span.lo, span.hi, span, span});
        }
        plan.rounds.push_back(std::move(round));
    }
    return plan;
}

// ---- routing ---------------------------------------------------------------------------------------

Rect hilbert_bounding_box(const HilbertCurve &h, Interval iv) {
    Rect b{h.rows(), h.cols(), -1, -1};
    for (int i = iv.lo; i <= iv.hi; i++) {
        Cell c = h.cell(i);
        b.r0 = std::min(b.r0, c.r);
        b.c0 = std::min(b.c0, c.c);
        b.r1 = std::max(b.r1, c.r);
        b.c1 = std::max(b.c1, c.c);
    }
    return b;
}

GateList route_round_on_hilbert(const std::vector<Rotation> &round, const HilbertCurve &h) {
    GateList out;
    for (const Rotation &g : round) {
        Rect box = hilbert_bounding_box(h, g.container);
        Cell a = h.cell(g.control), b = h.cell(g.target);
        std::vector<Cell> path{a};
        Cell cur = a;
        while (cur.c != b.c) {
            cur.c += cur.c < b.c ? 1 : -1;
            path.push_back(cur);
        }
        while (cur.r != b.r) {
            cur.r += cur.r < b.r ? 1 : -1;
            path.push_back(cur);
        }
        for (Cell c : path) {
            if (!box.contains(c)) throw std::logic_error("route_round_on_hilbert: path leaves its container");
        }
        int m = static_cast<int>(path.size()) - 1;
        int s = (m - 1) / 2;
        GateList chain;
        for (int i = 0; i < s; i++) chain.push_back(Gate::swap(path[i], path[i + 1]));
        for (int j = m; j > s + 1; j--) chain.push_back(Gate::swap(path[j], path[j - 1]));
        // Rotations whose rectangles overlap still compose correctly; the scheduler serializes them.
        out.insert(out.end(), chain.begin(), chain.end());
        out.push_back(Gate::cnot(path[s], path[s + 1]));
        GateList undo = inverse(chain);
        out.insert(out.end(), undo.begin(), undo.end());
    }
    return out;
}

EncodedLayout hilbert_layout(int k) {
    int n = check_k(k);
    HilbertCurve h(k);
    EncodedLayout lay;
    lay.k = k;
    lay.rows = h.rows();
    lay.cols = h.cols();
    lay.qubit_of_mode.resize(n);
    for (int i = 0; i < n; i++) {
        Cell c = h.cell(i);
        lay.qubit_of_mode[i] = c.r * lay.cols + c.c;
    }
    return lay;
}

static void append_plan(GateList &out, const RoundPlan &plan, const HilbertCurve &h) {
    for (const auto &round : plan.rounds) {
        GateList g = route_round_on_hilbert(round, h);
        out.insert(out.end(), g.begin(), g.end());
    }
}

GateList convert_encoding_circuit(Encoding src, int k) {
    check_k(k);
    HilbertCurve h(k);
    GateList out;
    if (src == Encoding::JW) return out;
    if (src == Encoding::Parity) append_plan(out, parity_to_bk_rounds(k), h);
    append_plan(out, bk_to_jw_rounds(k), h);
    return out;
}

GateList hilbert_to_snake_relayout(int k) {
    check_k(k);
    if (k % 2 != 0) throw std::invalid_argument("hilbert_to_snake_relayout: k must be even");
    int L = 1 << (k / 2);
    HilbertCurve h(k);
    std::vector<int> dest(L * L);
    for (int i = 0; i < L * L; i++) {
        Cell from = h.cell(i), to = snake_cell(i, L);
        dest[from.r * L + from.c] = to.r * L + to.c;
    }
    return relayout_gates(dest, L);
}

GateList fperm_under_encoding(const Permutation &pi, Encoding e, int k) {
    int n = check_k(k);
    if (k % 2 != 0) throw std::invalid_argument("fperm_under_encoding: k must be even");
    if (pi.size() != n) throw std::invalid_argument("fperm_under_encoding: permutation size must be 2^k - 1");
    int L = 1 << (k / 2);
    std::vector<int> ext = pi.map();
    ext.push_back(n);
    GateList conv = convert_encoding_circuit(e, k);
    GateList relayout = hilbert_to_snake_relayout(k);
    GateList out = conv;
    out.insert(out.end(), relayout.begin(), relayout.end());
    GateList core = compile_fperm_gates(Permutation(ext), L);
    out.insert(out.end(), core.begin(), core.end());
    GateList back = inverse(relayout);
    out.insert(out.end(), back.begin(), back.end());
    back = inverse(conv);
    out.insert(out.end(), back.begin(), back.end());
    return out;
}

MajoranaReport check_string_map(const GateList &gates, int cols, const std::vector<PauliString> &from,
                                const std::vector<PauliString> &to) {
    if (from.size() != to.size()) throw std::invalid_argument("check_string_map: size mismatch");
    MajoranaReport rep;
    for (size_t i = 0; i < from.size(); i++) {
        PauliString got = conjugate_pauli(gates, cols, from[i]);
        rep.checked++;
        if (!(got == to[i])) {
            if (rep.failed++ == 0) {
                rep.first_failure = "string " + std::to_string(i) + ": got " + got.str() + " want " + to[i].str();
            }
        }
    }
    return rep;
}

}  // namespace fermroute

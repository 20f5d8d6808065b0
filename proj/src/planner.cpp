// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/planner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace fermroute {

namespace {

struct Multigraph {
    int L;
    std::vector<int> left;   // source row of each edge
    std::vector<int> right;  // destination row of each edge
};

// One perfect matching of a regular bipartite multigraph restricted to `edges` (Kuhn).
std::vector<int> perfect_matching(const Multigraph &g, const std::vector<int> &edges) {
    int L = g.L;
    std::vector<std::vector<int>> adj(L);
    for (int e : edges) adj[g.left[e]].push_back(e);
    std::vector<int> match_right(L, -1);  // edge matched at each right vertex
    std::vector<char> seen(L);
    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int e : adj[u]) {
            int v = g.right[e];
            if (seen[v]) continue;
            seen[v] = 1;
            if (match_right[v] < 0 || augment(g.left[match_right[v]])) {
                match_right[v] = e;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < L; u++) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(u)) throw std::logic_error("regular bipartite multigraph without a perfect matching");
    }
    return match_right;
}

// Splits an even-degree regular multigraph into two halves of equal degree by alternating along closed walks.
void euler_split(const Multigraph &g, const std::vector<int> &edges, std::vector<int> &a, std::vector<int> &b) {
    int L = g.L;
    std::vector<std::vector<int>> adj(2 * L);
    for (int e : edges) {
        adj[g.left[e]].push_back(e);
        adj[L + g.right[e]].push_back(e);
    }
    std::vector<char> used(g.left.size(), 0);
    std::vector<size_t> ptr(2 * L, 0);
    for (int start = 0; start < 2 * L; start++) {
        int cur = start;
        int parity = 0;
        while (true) {
            auto &p = ptr[cur];
            while (p < adj[cur].size() && used[adj[cur][p]]) p++;
            if (p == adj[cur].size()) break;
            int e = adj[cur][p];
            used[e] = 1;
            (parity ? b : a).push_back(e);
            parity ^= 1;
            cur = cur < L ? L + g.right[e] : g.left[e];
        }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
}

void color_edges(const Multigraph &g, std::vector<int> edges, int degree, int base, std::vector<int> &color) {
    while (degree > 0) {
        if (degree == 1) {
            for (int e : edges) color[e] = base;
            return;
        }
        if (degree % 2 == 1) {
            std::vector<int> m = perfect_matching(g, edges);
            std::vector<char> in_m(g.left.size(), 0);
            for (int e : m) {
                in_m[e] = 1;
                color[e] = base;
            }
            std::vector<int> rest;
            for (int e : edges) {
                if (!in_m[e]) rest.push_back(e);
            }
            edges.swap(rest);
            degree--;
            base++;
            continue;
        }
        std::vector<int> a, b;
        euler_split(g, edges, a, b);
        color_edges(g, a, degree / 2, base, color);
        edges.swap(b);
        base += degree / 2;
        degree /= 2;
    }
}

std::vector<int> targets_of(const Permutation &p) { return p.map(); }

void emit_line_rounds(const std::vector<OetSchedule> &scheds, const std::function<Gate(int, int, int)> &make,
                      GateList &out) {
    size_t rounds = 0;
    for (const auto &s : scheds) rounds = std::max(rounds, s.rounds.size());
    for (size_t t = 0; t < rounds; t++) {
        for (size_t line = 0; line < scheds.size(); line++) {
            if (t >= scheds[line].rounds.size()) continue;
            for (auto [i, j] : scheds[line].rounds[t]) out.push_back(make(static_cast<int>(line), i, j));
        }
    }
}

}  // namespace

RcrPlan hall_rcr_plan_cells(const std::vector<int> &dest, int L) {
    int N = L * L;
    if (static_cast<int>(dest.size()) != N) throw std::invalid_argument("hall_rcr_plan: size is not L*L");
    Permutation check(dest);  // validates bijectivity
    Multigraph g{L, std::vector<int>(N), std::vector<int>(N)};
    for (int i = 0; i < N; i++) {
        g.left[i] = i / L;
        g.right[i] = dest[i] / L;
    }
    std::vector<int> color(N, -1);
    std::vector<int> all(N);
    for (int i = 0; i < N; i++) all[i] = i;
    color_edges(g, all, L, 0, color);

    // Canonical colours inside each class of parallel edges.
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int i = 0; i < N; i++) classes[{g.left[i], g.right[i]}].push_back(i);
    for (auto &[key, items] : classes) {
        std::vector<int> pool;
        for (int e : items) pool.push_back(color[e]);
        std::sort(pool.begin(), pool.end());
        std::vector<char> taken(pool.size(), 0);
        std::vector<int> assigned(items.size(), -1);
        for (size_t t = 0; t < items.size(); t++) {
            int own = items[t] % L;
            auto it = std::lower_bound(pool.begin(), pool.end(), own);
            if (it != pool.end() && *it == own) {
                taken[it - pool.begin()] = 1;
                assigned[t] = own;
            }
        }
        size_t next = 0;
        for (size_t t = 0; t < items.size(); t++) {
            if (assigned[t] >= 0) continue;
            while (taken[next]) next++;
            taken[next] = 1;
            assigned[t] = pool[next];
        }
        for (size_t t = 0; t < items.size(); t++) color[items[t]] = assigned[t];
    }

    std::vector<std::vector<int>> ra(L, std::vector<int>(L)), cs(L, std::vector<int>(L)), rb(L, std::vector<int>(L));
    for (int i = 0; i < N; i++) {
        int r = i / L, c = i % L, m = color[i];
        int r2 = dest[i] / L, c2 = dest[i] % L;
        ra[r][c] = m;
        cs[m][r] = r2;
        rb[r2][m] = c2;
    }
    RcrPlan plan;
    plan.L = L;
    for (int i = 0; i < L; i++) {
        plan.rowA.emplace_back(ra[i]);
        plan.col.emplace_back(cs[i]);
        plan.rowB.emplace_back(rb[i]);
    }
    return plan;
}

RcrPlan hall_rcr_plan(const Permutation &pi, int L) {
    if (pi.size() != L * L) throw std::invalid_argument("hall_rcr_plan: permutation size is not L*L");
    std::vector<int> dest(L * L);
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            Cell d = snake_cell(pi(snake_index(r, c, L)), L);
            dest[r * L + c] = d.r * L + d.c;
        }
    }
    return hall_rcr_plan_cells(dest, L);
}

std::vector<int> apply_rcr_cells(const RcrPlan &plan) {
    int L = plan.L;
    std::vector<int> dest(L * L);
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            int m = plan.rowA[r](c);
            int r2 = plan.col[m](r);
            int c2 = plan.rowB[r2](m);
            dest[r * L + c] = r2 * L + c2;
        }
    }
    return dest;
}

Permutation rcr_permutation(const RcrPlan &plan) {
    int L = plan.L;
    std::vector<int> cells = apply_rcr_cells(plan);
    std::vector<int> m(L * L);
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            int d = cells[r * L + c];
            m[snake_index(r, c, L)] = snake_index(d / L, d % L, L);
        }
    }
    return Permutation(std::move(m));
}

OetSchedule oet_schedule(const std::vector<int> &targets) {
    Permutation check(targets);
    OetSchedule s;
    s.n = static_cast<int>(targets.size());
    std::vector<int> cur = targets;
    auto sorted = [&] {
        for (int i = 0; i + 1 < s.n; i++) {
            if (cur[i] > cur[i + 1]) return false;
        }
        return true;
    };
    for (int t = 0; t < s.n && !sorted(); t++) {
        std::vector<std::pair<int, int>> round;
        for (int i = t % 2; i + 1 < s.n; i += 2) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                round.emplace_back(i, i + 1);
            }
        }
        s.rounds.push_back(std::move(round));
    }
    if (!sorted()) throw std::logic_error("oet_schedule: not sorted after n rounds");
    return s;
}

GateList row_stage_gates(const std::vector<Permutation> &stage, int L, GateKind kind) {
    if (static_cast<int>(stage.size()) != L) throw std::invalid_argument("row stage: need one permutation per row");
    std::vector<OetSchedule> scheds;
    for (const auto &p : stage) {
        if (p.size() != L) throw std::invalid_argument("row stage: permutation leaves its row");
        scheds.push_back(oet_schedule(targets_of(p)));
    }
    GateList out;
    emit_line_rounds(scheds, [&](int r, int i, int j) { return Gate{kind, {r, i}, {r, j}}; }, out);
    return out;
}

GateList column_stage_gates(const std::vector<Permutation> &stage, int L, GateKind kind) {
    if (static_cast<int>(stage.size()) != L) throw std::invalid_argument("column stage: need one permutation per column");
    std::vector<OetSchedule> scheds;
    for (const auto &p : stage) {
        if (p.size() != L) throw std::invalid_argument("column stage: permutation leaves its column");
        scheds.push_back(oet_schedule(targets_of(p)));
    }
    GateList out;
    emit_line_rounds(scheds, [&](int c, int i, int j) { return Gate{kind, {i, c}, {j, c}}; }, out);
    return out;
}

GateList chain_sort_gates(const Permutation &pi, int L) {
    if (pi.size() != L * L) throw std::invalid_argument("chain sort: permutation size is not L*L");
    OetSchedule s = oet_schedule(pi.map());
    GateList out;
    for (const auto &round : s.rounds) {
        for (auto [i, j] : round) out.push_back(Gate::fswap(snake_cell(i, L), snake_cell(j, L)));
    }
    return out;
}

Circuit row_stage_circuit(const std::vector<Permutation> &stage, int L) {
    return schedule_greedy(row_stage_gates(stage, L), L, L);
}

Circuit bare_column_sort_circuit(const std::vector<Permutation> &stage, int L) {
    return schedule_greedy(column_stage_gates(stage, L), L, L);
}

Circuit chain_sort_circuit(const Permutation &pi, int L) { return schedule_greedy(chain_sort_gates(pi, L), L, L); }

GateList relayout_gates(const std::vector<int> &dest, int L) {
    RcrPlan plan = hall_rcr_plan_cells(dest, L);
    GateList out = row_stage_gates(plan.rowA, L, GateKind::SWAP);
    GateList col = column_stage_gates(plan.col, L, GateKind::SWAP);
    GateList rb = row_stage_gates(plan.rowB, L, GateKind::SWAP);
    out.insert(out.end(), col.begin(), col.end());
    out.insert(out.end(), rb.begin(), rb.end());
    return out;
}

}  // namespace fermroute

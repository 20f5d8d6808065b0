// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/fperm.hpp"

#include <bit>
#include <stdexcept>

#include "fermroute/gamma.hpp"
#include "fermroute/planner.hpp"
#include "fermroute/verify.hpp"

namespace fermroute {

const char *method_name(FpermMethod m) { return m == FpermMethod::Ours ? "ours" : "oned_fswap"; }

FpermMethod method_from_name(const std::string &name) {
    if (name == "ours") return FpermMethod::Ours;
    if (name == "oned_fswap") return FpermMethod::OneD;
    throw std::invalid_argument("unknown method: " + name);
}

GateList compile_fperm_gates(const Permutation &pi, int L) {
    if (L < 2) throw std::invalid_argument("compile_fperm: L must be at least 2");
    RcrPlan plan = hall_rcr_plan(pi, L);
    GateList gamma = gamma_gates(L);
    GateList out = row_stage_gates(plan.rowA, L);
    GateList col = column_stage_gates(plan.col, L);
    GateList rb = row_stage_gates(plan.rowB, L);
    out.insert(out.end(), gamma.begin(), gamma.end());
    out.insert(out.end(), col.begin(), col.end());
    out.insert(out.end(), gamma.begin(), gamma.end());
    out.insert(out.end(), rb.begin(), rb.end());
    return out;
}

Circuit compile_fperm(const Permutation &pi, int L) {
    Circuit c = schedule_greedy(compile_fperm_gates(pi, L), L, L);
    c.metadata["method"] = "ours";
    return c;
}

GateList compile_fperm_1d_gates(const Permutation &pi, int L) { return chain_sort_gates(pi, L); }

Circuit compile_fperm_1d(const Permutation &pi, int L) {
    Circuit c = schedule_greedy(compile_fperm_1d_gates(pi, L), L, L);
    c.metadata["method"] = "oned_fswap";
    return c;
}

GateList compile_gates(FpermMethod m, const Permutation &pi, int L) {
    return m == FpermMethod::Ours ? compile_fperm_gates(pi, L) : compile_fperm_1d_gates(pi, L);
}

std::vector<NamedPermutation> benchmark_ensemble(int L, int random_count, uint64_t seed) {
    std::vector<NamedPermutation> out;
    out.push_back({"reversal", 0, Permutation::reversal(L * L)});
    out.push_back({"transpose", 0, transpose_permutation(L)});
    for (int i = 0; i < random_count; i++) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<uint64_t>(i)));
        out.push_back({"random", i, random_permutation(L * L, rng)});
    }
    return out;
}

int64_t cost_ours(int L) { return 22 * int64_t{L} + 20; }
int64_t cost_oned(int L) { return 2 * int64_t{L} * L; }
int64_t cost_ancilla_gamma(int L) { return 32 * int64_t{L} + 8; }

static int64_t exact_log2(int L) {
    if (L < 1 || !std::has_single_bit(static_cast<unsigned>(L))) {
        throw std::domain_error("the reconf and staircase cost models need L to be a power of two");
    }
    return std::countr_zero(static_cast<unsigned>(L));
}

int64_t cost_reconf(int L) {
    int64_t lg = exact_log2(L);
    const int64_t kappa = 17;
    return (17 * int64_t{L} + kappa) * lg + 38 * int64_t{L} - 36;
}

int64_t cost_staircase(int L) {
    int64_t lg = exact_log2(L);
    int64_t l = L;
    return 108 * l * lg * lg + 615 * l * lg - 274 * l + 36 * lg * lg - 276 * lg + 276;
}

std::vector<CostRow> cost_table(int L) {
    int64_t N = int64_t{L} * L;
    std::vector<CostRow> rows;
    rows.push_back({"ours", cost_ours(L), 0, N});
    rows.push_back({"oned_fswap", cost_oned(L), 0, N});
    rows.push_back({"ancilla_gamma", cost_ancilla_gamma(L), L, N + L});
    bool pow2 = L >= 1 && std::has_single_bit(static_cast<unsigned>(L));
    rows.push_back({"reconf_2dnn", pow2 ? std::optional<int64_t>(cost_reconf(L)) : std::nullopt, N + L, 2 * N + L});
    rows.push_back({"staircase_2dnn", pow2 ? std::optional<int64_t>(cost_staircase(L)) : std::nullopt, 0, N});
    return rows;
}

int depth_crossover_L() {
    for (int L = 1;; L++) {
        if (cost_oned(L) > cost_ours(L)) return L;
    }
}

std::vector<CrossoverPoint> fidelity_scan(double p2q, int L_min, int L_max, int random_count, uint64_t seed) {
    std::vector<CrossoverPoint> out;
    for (int L = L_min; L <= L_max; L++) {
        CrossoverPoint pt;
        pt.L = L;
        auto ens = benchmark_ensemble(L, random_count, derive_seed(seed, L));
        ens.erase(ens.begin(), ens.begin() + 2);  // random permutations only
        for (const auto &np : ens) {
            pt.fidelity_ours += estimate_fidelity(metrics(compile_fperm_gates(np.pi, L), L, L), p2q);
            pt.fidelity_oned += estimate_fidelity(metrics(compile_fperm_1d_gates(np.pi, L), L, L), p2q);
        }
        pt.fidelity_ours /= ens.size();
        pt.fidelity_oned /= ens.size();
        out.push_back(pt);
    }
    return out;
}

int analytic_crossover(double p2q, int L_max, int random_count, uint64_t seed) {
    if (!(p2q > 0 && p2q < 1)) throw std::invalid_argument("analytic_crossover: p2q must lie in (0,1)");
    auto scan = fidelity_scan(p2q, 2, L_max, random_count, seed);
    int cross = 0;
    for (const auto &pt : scan) {
        if (pt.fidelity_ours > pt.fidelity_oned) {
            if (cross == 0) cross = pt.L;
        } else {
            cross = 0;
        }
    }
    return cross;
}

}  // namespace fermroute

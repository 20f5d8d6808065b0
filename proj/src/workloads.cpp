// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/workloads.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fermroute/fperm.hpp"
#include "fermroute/gamma.hpp"
#include "fermroute/planner.hpp"

namespace fermroute {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

const char *variant_name(FfftVariant v) {
    switch (v) {
        case FfftVariant::FswapBaseline:
            return "fswap_baseline";
        case FfftVariant::FpSandwich:
            return "fp_sandwich";
        case FfftVariant::GammaSandwich:
            return "gamma_sandwich";
    }
    return "?";
}

FfftVariant variant_from_name(const std::string &name) {
    if (name == "fswap_baseline") return FfftVariant::FswapBaseline;
    if (name == "fp_sandwich") return FfftVariant::FpSandwich;
    if (name == "gamma_sandwich") return FfftVariant::GammaSandwich;
    throw std::invalid_argument("unknown FFFT variant: " + name);
}

// ---- 1D -----------------------------------------------------------------------------------------

static void require_pow2(int L, const char *what) {
    if (L < 1 || !std::has_single_bit(static_cast<unsigned>(L))) {
        throw std::invalid_argument(std::string(what) + ": L must be a power of two");
    }
}

namespace {

// Tracks which logical slot sits at each chain position and emits FSWAP rounds to rearrange.
struct Chain {
    const std::vector<Cell> &cells;
    std::vector<int> slot_at, pos_of;
    GateList &out;

    void move_to(const std::vector<int> &new_pos) {
        int n = static_cast<int>(cells.size());
        std::vector<int> targets(n);
        for (int p = 0; p < n; p++) targets[p] = new_pos[slot_at[p]];
        OetSchedule s = oet_schedule(targets);
        for (const auto &round : s.rounds) {
            for (auto [i, j] : round) {
                out.push_back(Gate::fswap(cells[i], cells[j]));
                std::swap(slot_at[i], slot_at[j]);
            }
        }
        for (int p = 0; p < n; p++) pos_of[slot_at[p]] = p;
    }
};

}  // namespace

GateList build_ffft_1d_local(const std::vector<Cell> &chain) {
    int L = static_cast<int>(chain.size());
    require_pow2(L, "build_ffft_1d_local");
    for (int i = 0; i + 1 < L; i++) {
        if (!cells_adjacent(chain[i], chain[i + 1])) throw std::invalid_argument("build_ffft_1d_local: chain not adjacent");
    }
    GateList out;
    if (L == 1) return out;
    int m = std::countr_zero(static_cast<unsigned>(L));
    auto bitrev = [m](int x) {
        int y = 0;
        for (int b = 0; b < m; b++) y |= ((x >> b) & 1) << (m - 1 - b);
        return y;
    };
    // Iterative decimation in time: slot x starts with input bitrev(x) and ends with output x.
    Chain ch{chain, std::vector<int>(L), std::vector<int>(L), out};
    for (int x = 0; x < L; x++) {
        ch.pos_of[x] = bitrev(x);
        ch.slot_at[bitrev(x)] = x;
    }
    for (int s = 1; s <= m; s++) {
        int half = 1 << (s - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int b = 0; b < L; b += 2 * half) {
            for (int j = 0; j < half; j++) pairs.emplace_back(b + j, b + j + half);
        }
        std::stable_sort(pairs.begin(), pairs.end(), [&](auto u, auto v) {
            return ch.pos_of[u.first] + ch.pos_of[u.second] < ch.pos_of[v.first] + ch.pos_of[v.second];
        });
        std::vector<int> want(L);
        for (int t = 0; t < L / 2; t++) {
            want[pairs[t].first] = 2 * t;
            want[pairs[t].second] = 2 * t + 1;
        }
        ch.move_to(want);
        for (auto [u, v] : pairs) {
            int j = u % half;
            Cell a = chain[ch.pos_of[u]], b = chain[ch.pos_of[v]];
            if (j != 0) out.push_back(Gate::phase(b, -2 * kPi * j / (2 * half)));
            out.push_back(Gate::z(b));
            out.push_back(Gate::givens(a, b, kPi / 4));
        }
    }
    std::vector<int> final_pos(L);
    for (int x = 0; x < L; x++) final_pos[x] = x;
    ch.move_to(final_pos);
    return out;
}

GateList build_ffft_1d_local(int L) {
    require_pow2(L, "build_ffft_1d_local");
    std::vector<Cell> chain;
    for (int c = 0; c < L; c++) chain.push_back({0, c});
    return build_ffft_1d_local(chain);
}

// ---- 2D -----------------------------------------------------------------------------------------

static std::vector<Cell> row_chain(int r, int L) {
    std::vector<Cell> ch;
    for (int c = 0; c < L; c++) ch.push_back({r, c});
    return ch;
}

static std::vector<Cell> column_chain(int c, int L) {
    std::vector<Cell> ch;
    for (int r = 0; r < L; r++) ch.push_back({r, c});
    return ch;
}

static void append(GateList &out, const GateList &g) { out.insert(out.end(), g.begin(), g.end()); }

static GateList transpose_fp(FfftVariant v, int L) {
    Permutation t = transpose_permutation(L);
    return v == FfftVariant::FswapBaseline ? compile_fperm_1d_gates(t, L) : compile_fperm_gates(t, L);
}

GateList ffft_column_stage(const FfftConfig &cfg) {
    int L = cfg.L;
    require_pow2(L, "build_ffft_2d");
    if (L < 2) throw std::invalid_argument("build_ffft_2d: L must be at least 2");
    GateList out;
    if (cfg.variant == FfftVariant::GammaSandwich) {
        GateList gamma = gamma_gates(L);
        append(out, gamma);
        for (int c = 0; c < L; c++) append(out, build_ffft_1d_local(column_chain(c, L)));
        append(out, gamma);
    } else {
        // Transpose, transform what were columns along rows, transpose back.
        GateList t = transpose_fp(cfg.variant, L);
        append(out, t);
        for (int r = 0; r < L; r++) append(out, build_ffft_1d_local(row_chain(r, L)));
        append(out, t);
    }
    return out;
}

GateList build_ffft_2d(const FfftConfig &cfg) {
    int L = cfg.L;
    int N = L * L;
    GateList out = ffft_column_stage(cfg);
    for (int k1 = 1; k1 < L; k1++) {
        for (int n2 = 1; n2 < L; n2++) out.push_back(Gate::phase({k1, n2}, -2 * kPi * n2 * k1 / N));
    }
    for (int r = 0; r < L; r++) append(out, build_ffft_1d_local(row_chain(r, L)));
    append(out, transpose_fp(cfg.variant, L));
    return out;
}

Eigen::MatrixXcd ffft_single_particle(int L) {
    int N = L * L;
    Eigen::MatrixXcd W(N, N);
    for (int n = 0; n < N; n++) {
        for (int k = 0; k < N; k++) {
            double ang = -2 * kPi * static_cast<double>((static_cast<int64_t>(n) * k) % N) / N;
            W(snake_index(k / L, k % L, L), snake_index(n / L, n % L, L)) = std::polar(1.0 / std::sqrt(N), ang);
        }
    }
    return W;
}

uint64_t occupation_index(const std::vector<int> &positions, int L) {
    uint64_t idx = 0;
    for (int p : positions) {
        Cell c = snake_cell(p, L);
        idx |= uint64_t{1} << (c.r * L + c.c);
    }
    return idx;
}

Eigen::MatrixXcd ffft_many_body_oracle(int L) {
    int N = L * L;
    if (N > 12) throw std::invalid_argument("ffft_many_body_oracle: at most 12 modes");
    Eigen::MatrixXcd W = ffft_single_particle(L);
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(W);
    Eigen::MatrixXcd T = schur.matrixT();
    Eigen::MatrixXcd logT = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i < N; i++) logT(i, i) = std::log(T(i, i));
    Eigen::MatrixXcd h = cd(0, -1) * schur.matrixU() * logT * schur.matrixU().adjoint();
    int64_t dim = int64_t{1} << N;
    // a_j^dag on snake position j.
    std::vector<Eigen::MatrixXcd> adag(N, Eigen::MatrixXcd::Zero(dim, dim));
    for (int j = 0; j < N; j++) {
        uint64_t bit = occupation_index({j}, L);
        uint64_t before = 0;
        for (int l = 0; l < j; l++) before |= occupation_index({l}, L);
        for (int64_t b = 0; b < dim; b++) {
            if (b & bit) continue;
            double sign = (std::popcount(static_cast<uint64_t>(b) & before) & 1) ? -1.0 : 1.0;
            adag[j](b | bit, b) = sign;
        }
    }
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = 0; m < N; m++) {
        for (int n = 0; n < N; n++) {
            if (std::abs(h(m, n)) > 0) H += h(m, n) * adag[m] * adag[n].adjoint();
        }
    }
    H = (H + H.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    Eigen::VectorXcd ph(dim);
    for (int64_t i = 0; i < dim; i++) ph[i] = std::polar(1.0, es.eigenvalues()[i]);
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// ---- SYK ------------------------------------------------------------------------------------------

static uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; i++) r = r * (n - k + i) / i;
    return r;
}

// Lexicographic unranking of 4-subsets of [0, M).
static std::array<int, 4> unrank_quartet(uint64_t rank, int M) {
    std::array<int, 4> q{};
    int v = 0;
    for (int t = 0; t < 4; t++) {
        for (;; v++) {
            uint64_t cnt = binom(M - 1 - v, 3 - t);
            if (rank < cnt) break;
            rank -= cnt;
        }
        q[t] = v++;
    }
    return q;
}

SykInstance sample_syk_terms(int N, double k, uint64_t seed, double dt) {
    if (N < 2) throw std::invalid_argument("sample_syk_terms: N must be at least 2");
    if (!(k >= 0)) throw std::invalid_argument("sample_syk_terms: k must be non-negative");
    SykInstance inst{N, k, seed, dt, {}};
    int M = 2 * N;
    uint64_t total = binom(M, 4);
    double p = std::min(1.0, k * M / static_cast<double>(total));
    if (p <= 0) return inst;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> coupling(0.0, std::sqrt(6.0 / (static_cast<double>(N) * N * N)));
    auto take = [&](uint64_t r) { inst.terms.push_back({unrank_quartet(r, M), coupling(rng)}); };
    if (p >= 1) {
        for (uint64_t r = 0; r < total; r++) take(r);
        return inst;
    }
    std::geometric_distribution<uint64_t> gap(p);
    for (uint64_t r = gap(rng); r < total; r += 1 + gap(rng)) take(r);
    return inst;
}

std::vector<std::vector<SykTerm>> color_terms(std::vector<SykTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const SykTerm &a, const SykTerm &b) { return a.q < b.q; });
    int modes = 0;
    for (const auto &t : terms) modes = std::max(modes, t.q[3] / 2 + 1);
    std::vector<std::vector<SykTerm>> groups;
    std::vector<std::vector<char>> used;
    for (const auto &t : terms) {
        size_t c = 0;
        for (; c < groups.size(); c++) {
            bool clash = false;
            for (int x : t.q) clash |= used[c][x / 2] != 0;
            if (!clash) break;
        }
        if (c == groups.size()) {
            groups.emplace_back();
            used.emplace_back(modes, 0);
        }
        groups[c].push_back(t);
        for (int x : t.q) used[c][x / 2] = 1;
    }
    return groups;
}

static std::vector<int> term_modes(const SykTerm &t) {
    std::vector<int> m;
    for (int x : t.q) {
        if (m.empty() || m.back() != x / 2) m.push_back(x / 2);
    }
    return m;
}

Permutation packing_permutation(const std::vector<SykTerm> &group, int N) {
    std::vector<int> pos(N, -1);
    int next = 0;
    for (const auto &t : group) {
        for (int m : term_modes(t)) {
            if (m >= N) throw std::invalid_argument("packing_permutation: mode out of range");
            if (pos[m] >= 0) throw std::invalid_argument("packing_permutation: terms share a mode");
            pos[m] = next++;
        }
    }
    for (int m = 0; m < N; m++) {
        if (pos[m] < 0) pos[m] = next++;
    }
    return Permutation(pos);
}

static int grid_side(int N) {
    int L = static_cast<int>(std::lround(std::sqrt(static_cast<double>(N))));
    if (L * L != N || L < 2) throw std::invalid_argument("SYK circuits need N = L^2 with L >= 2");
    return L;
}

// exp(-i theta M) for M the term's Majorana product, already packed onto consecutive positions.
static GateList local_rotation(const PauliString &M, int lo, int hi, double theta, int L) {
    std::vector<Cell> chain;
    std::vector<int> letter;  // 0 I, 1 X, 2 Y, 3 Z
    int ys = 0;
    for (int p = lo; p <= hi; p++) {
        Cell c = snake_cell(p, L);
        int q = c.r * L + c.c;
        int x = M.x(q), z = M.z(q);
        chain.push_back(c);
        letter.push_back(x && z ? 2 : x ? 1 : z ? 3 : 0);
        ys += x && z;
    }
    for (int q = 0; q < L * L; q++) {
        Cell c{q / L, q % L};
        int p = snake_index(c.r, c.c, L);
        if ((p < lo || p > hi) && (M.x(q) || M.z(q))) throw std::logic_error("SYK term not local after packing");
    }
    // i^e X^x Z^z with XZ = -iY on each Y site.
    int e = (M.phase() - ys) & 3;
    if (e & 1) throw std::logic_error("SYK term is not Hermitian");
    double sign = e == 0 ? 1.0 : -1.0;
    while (!chain.empty() && letter.back() == 0) {
        chain.pop_back();
        letter.pop_back();
    }
    size_t first = 0;
    while (first < letter.size() && letter[first] == 0) first++;
    GateList basis, ladder;
    for (size_t i = first; i < chain.size(); i++) {
        if (letter[i] == 1) basis.push_back(Gate::h(chain[i]));
        if (letter[i] == 2) {
            basis.push_back(Gate::z(chain[i]));
            basis.push_back(Gate::s(chain[i]));
            basis.push_back(Gate::h(chain[i]));
        }
    }
    // Identity sites inside the run first fold their own bit into the next site, so the ladder
    // carries the parity of the support only.
    for (size_t i = chain.size() - 1; i-- > first + 1;) {
        if (letter[i] == 0) ladder.push_back(Gate::cnot(chain[i], chain[i + 1]));
    }
    for (size_t i = first; i + 1 < chain.size(); i++) ladder.push_back(Gate::cnot(chain[i], chain[i + 1]));
    GateList out = basis;
    append(out, ladder);
    out.push_back(Gate::rz(chain.back(), 2 * theta * sign));
    append(out, inverse(ladder));
    append(out, inverse(basis));
    return out;
}

TrotterStep build_trotter_step(const SykInstance &inst) {
    TrotterStep step;
    if (inst.terms.empty()) return step;
    int L = grid_side(inst.N);
    std::vector<PauliString> gam = grid_jw_majoranas(L);
    auto groups = color_terms(inst.terms);
    step.groups = static_cast<int>(groups.size());
    for (const auto &group : groups) {
        Permutation pi = packing_permutation(group, inst.N);
        GateList fwd = compile_fperm_gates(pi, L);
        GateList back = compile_fperm_gates(invert(pi), L);
        GateList rot;
        for (const auto &t : group) {
            PauliString M(L * L);
            int lo = L * L, hi = -1;
            for (int x : t.q) {
                int p = pi(x / 2);
                M = M * gam[2 * p + (x & 1)];
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
            append(rot, local_rotation(M, lo, hi, t.J * inst.dt, L));
        }
        step.fp_depth += metrics(fwd, L, L).cnot_depth + metrics(back, L, L).cnot_depth;
        step.rotation_depth += metrics(rot, L, L).cnot_depth;
        append(step.gates, fwd);
        append(step.gates, rot);
        append(step.gates, back);
    }
    return step;
}

Amplitudes syk_oracle_apply(const SykInstance &inst, const Amplitudes &psi) {
    int L = grid_side(inst.N);
    std::vector<PauliString> gam = grid_jw_majoranas(L);
    Amplitudes out = psi;
    for (const auto &group : color_terms(inst.terms)) {
        for (const auto &t : group) {
            PauliString M(L * L);
            for (int x : t.q) M = M * gam[x];
            double th = t.J * inst.dt;
            out = std::cos(th) * out - cd(0, 1) * std::sin(th) * apply_pauli(M, out);
        }
    }
    return out;
}

OracleCheck verify_ffft(const FfftConfig &cfg) {
    int L = cfg.L, N = L * L;
    GateList g = build_ffft_2d(cfg);
    OracleCheck out;
    if (L == 2) {
        Eigen::MatrixXcd u = circuit_unitary(g, 2, 2), o = ffft_many_body_oracle(2);
        // align the global phase on the largest oracle entry
        Eigen::Index r, c;
        o.cwiseAbs().maxCoeff(&r, &c);
        cd ph = u(r, c) / o(r, c);
        ph /= std::abs(ph);
        out.what = "full unitary";
        out.checked = u.size();
        out.max_error = (u - ph * o).cwiseAbs().maxCoeff();
        return out;
    }
    Eigen::MatrixXcd W = ffft_single_particle(L);
    auto amp = [](const SparseState &s, uint64_t key) {
        auto it = s.find(key);
        return it == s.end() ? cd(0) : it->second;
    };
    // weight outside the sector with `particles` excitations
    auto leak = [](const SparseState &s, int particles) {
        double t = 0;
        for (const auto &[k, a] : s) {
            if (std::popcount(k) != particles) t += std::norm(a);
        }
        return std::sqrt(t);
    };
    out.what = "single-excitation columns";
    for (int p = 0; p < N; p++) {
        SparseState s = sparse_simulate(g, L, {{occupation_index({p}, L), 1.0}});
        for (int q = 0; q < N; q++) {
            cd a = amp(s, occupation_index({q}, L));
            out.max_error = std::max(out.max_error, std::abs(a - W(q, p)));
            out.checked++;
        }
        out.max_error = std::max(out.max_error, leak(s, 1));
    }
    if (L > 4) return out;
    out.what = "single- and two-excitation sectors";
    for (int p = 0; p < N; p++) {
        for (int pp = p + 1; pp < N; pp++) {
            SparseState s = sparse_simulate(g, L, {{occupation_index({p, pp}, L), 1.0}});
            for (int q = 0; q < N; q++) {
                for (int qq = q + 1; qq < N; qq++) {
                    cd a = amp(s, occupation_index({q, qq}, L));
                    cd want = W(q, p) * W(qq, pp) - W(qq, p) * W(q, pp);
                    out.max_error = std::max(out.max_error, std::abs(a - want));
                    out.checked++;
                }
            }
            out.max_error = std::max(out.max_error, leak(s, 2));
        }
    }
    return out;
}

OracleCheck verify_trotter_step(const SykInstance &inst, int states, uint64_t seed) {
    if (inst.N > 16) throw std::invalid_argument("verify_trotter_step: N must be at most 16");
    int L = grid_side(inst.N);
    TrotterStep st = build_trotter_step(inst);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    OracleCheck out;
    out.what = "trotter step vs ordered exponentials";
    for (int s = 0; s < states; s++) {
        Amplitudes psi(int64_t{1} << inst.N);
        for (auto &a : psi) a = {nd(rng), nd(rng)};
        psi.normalize();
        Amplitudes got = statevector_simulate(st.gates, L, L, psi);
        out.max_error = std::max(out.max_error, (got - syk_oracle_apply(inst, psi)).cwiseAbs().maxCoeff());
        out.checked++;
    }
    return out;
}

}  // namespace fermroute

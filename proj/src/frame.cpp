// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace fermroute {

namespace {

struct Step {
    GateKind kind;
    int a, b;
};

// CNOT layers with the single-qubit gates that follow each one. Layer 0 holds only the
// single-qubit gates that precede every CNOT.
struct Timeline {
    int depth = 0;
    std::vector<std::vector<Step>> cnots;   // [layer]
    std::vector<std::vector<Step>> locals;  // [layer], program order
};

Timeline build_timeline(const GateList &gates, int nq, int cols) {
    GateList compiled = decompose_to_cnot(gates);
    Timeline tl;
    std::vector<int> layer = entangling_layers(compiled, cols, &tl.depth);
    tl.cnots.resize(tl.depth + 1);
    tl.locals.resize(tl.depth + 1);
    std::vector<int> last(nq, 0);
    for (size_t i = 0; i < compiled.size(); i++) {
        const Gate &g = compiled[i];
        int qa = g.a.r * cols + g.a.c;
        switch (g.kind) {
            case GateKind::CNOT: {
                int qb = g.b.r * cols + g.b.c;
                tl.cnots[layer[i]].push_back({g.kind, qa, qb});
                last[qa] = last[qb] = layer[i];
                break;
            }
            case GateKind::H:
            case GateKind::S:
            case GateKind::X:
            case GateKind::Z:
                tl.locals[last[qa]].push_back({g.kind, qa, -1});
                break;
            default:
                throw std::invalid_argument(std::string("pauli_frame_sample: non-Clifford gate ") + gate_name(g.kind));
        }
    }
    return tl;
}

class FrameBlock {
   public:
    FrameBlock(int nq, size_t words, const simd::Kernels &k) : nq_(nq), w_(words), k_(k), x_(nq * words), z_(nq * words) {}

    uint64_t *x(int q) { return &x_[q * w_]; }
    uint64_t *z(int q) { return &z_[q * w_]; }

    // Conjugation bit rules; identical for a gate and its inverse up to sign.
    void apply(const Step &s) {
        switch (s.kind) {
            case GateKind::H:
                k_.swap_words(x(s.a), z(s.a), w_);
                break;
            case GateKind::S:
                k_.xor_into(z(s.a), x(s.a), w_);
                break;
            case GateKind::CNOT:
                k_.xor_into(x(s.b), x(s.a), w_);
                k_.xor_into(z(s.a), z(s.b), w_);
                break;
            default:
                break;
        }
    }

    // pauli in 1..3 -> X, Y, Z
    void flip(int q, size_t shot, int pauli) {
        uint64_t m = uint64_t{1} << (shot & 63);
        if (pauli != 3) x(q)[shot >> 6] ^= m;
        if (pauli != 1) z(q)[shot >> 6] ^= m;
    }

    uint64_t clean_shots(size_t valid) {
        std::vector<uint64_t> acc(w_, 0);
        for (int q = 0; q < nq_; q++) k_.or_into(acc.data(), x(q), w_);
        k_.invert(acc.data(), w_);
        if (valid < 64 * w_) {
            for (size_t i = valid; i < 64 * w_; i++) acc[i >> 6] &= ~(uint64_t{1} << (i & 63));
        }
        return k_.popcount(acc.data(), w_);
    }

   private:
    int nq_;
    size_t w_;
    const simd::Kernels &k_;
    std::vector<uint64_t> x_, z_;
};

// Visits (location, shot) pairs hit with probability p, locations in [0, n_loc), shots in [0, n_shot).
template <class F>
void for_each_hit(double p, uint64_t n_loc, uint64_t n_shot, std::mt19937_64 &rng, F &&hit) {
    if (p <= 0 || n_loc == 0) return;
    uint64_t total = n_loc * n_shot;
    if (p >= 1) {
        for (uint64_t i = 0; i < total; i++) hit(i / n_shot, i % n_shot);
        return;
    }
    std::geometric_distribution<uint64_t> gap(p);
    for (uint64_t i = gap(rng); i < total; i += 1 + gap(rng)) hit(i / n_shot, i % n_shot);
}

}  // namespace

FrameResult pauli_frame_sample(const GateList &gates, int rows, int cols, const NoiseParams &noise,
                               const simd::Kernels &kernels) {
    if (!(noise.p2q >= 0 && noise.p2q <= 1 && noise.p_idle >= 0 && noise.p_idle <= 1)) {
        throw std::invalid_argument("pauli_frame_sample: probabilities must lie in [0,1]");
    }
    int nq = rows * cols;
    Timeline tl = build_timeline(gates, nq, cols);
    FrameResult res;
    res.shots = noise.shots;
    const uint64_t block_shots = 64 * kFrameBlockWords;
    std::vector<int> idle;
    std::vector<char> busy(nq);
    for (uint64_t b = 0; b * block_shots < noise.shots; b++) {
        uint64_t n = std::min<uint64_t>(block_shots, noise.shots - b * block_shots);
        std::mt19937_64 rng(derive_seed(noise.seed, b));
        std::uniform_int_distribution<int> pick2(1, 15), pick1(1, 3);
        FrameBlock fb(nq, kFrameBlockWords, kernels);
        // Errors after the k-th gate reach the measurement as U_{<=k}^dag E U_{<=k}, so the
        // circuit is walked backwards from the last layer.
        for (int l = tl.depth; l >= 0; l--) {
            for (auto it = tl.locals[l].rbegin(); it != tl.locals[l].rend(); ++it) fb.apply(*it);
            if (l == 0) break;
            const auto &cn = tl.cnots[l];
            std::fill(busy.begin(), busy.end(), 0);
            for (const Step &s : cn) busy[s.a] = busy[s.b] = 1;
            idle.clear();
            for (int q = 0; q < nq; q++) {
                if (!busy[q]) idle.push_back(q);
            }
            for_each_hit(noise.p_idle, idle.size(), n, rng,
                         [&](uint64_t loc, uint64_t shot) { fb.flip(idle[loc], shot, pick1(rng)); });
            for_each_hit(noise.p2q, cn.size(), n, rng, [&](uint64_t loc, uint64_t shot) {
                int e = pick2(rng);
                if (e & 3) fb.flip(cn[loc].a, shot, e & 3);
                if (e >> 2) fb.flip(cn[loc].b, shot, e >> 2);
            });
            for (const Step &s : cn) fb.apply(s);
        }
        res.successes += fb.clean_shots(n);
    }
    if (res.shots) {
        res.fidelity = static_cast<double>(res.successes) / res.shots;
        res.std_error = std::sqrt(res.fidelity * (1 - res.fidelity) / res.shots);
    }
    return res;
}

FrameResult pauli_frame_sample(const GateList &gates, int rows, int cols, const NoiseParams &noise) {
    return pauli_frame_sample(gates, rows, cols, noise, simd::active_kernels());
}

}  // namespace fermroute

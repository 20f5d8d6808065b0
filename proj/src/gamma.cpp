// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/gamma.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fermroute {

BitRow BitGrid::row(int r) const {
    BitRow out(L, 0);
    if (r < 0 || r >= L) return out;
    for (int c = 0; c < L; c++) out[c] = s[r * L + c];
    return out;
}

BitGrid BitGrid::suffix_parity() const {
    BitGrid out(L);
    for (int c = 0; c < L; c++) {
        uint8_t acc = 0;
        for (int r = L - 1; r >= 0; r--) {
            acc ^= at(r, c);
            out.at(r, c) = acc;
        }
    }
    return out;
}

int T(const BitRow &x, const BitRow &y) {
    if (x.size() != y.size()) throw std::invalid_argument("T: length mismatch");
    int prefix = 0, acc = 0;
    for (size_t c = 0; c < x.size(); c++) {
        acc ^= prefix & y[c];
        prefix ^= x[c];
    }
    return acc;
}

int f_D(const BitGrid &s) {
    int f = 0;
    for (int r = 0; r < s.L; r += 2) {
        BitRow x = s.row(r);
        f ^= T(x, x) ^ T(x, s.row(r + 1));
    }
    return f;
}

int f_B(const BitGrid &st) {
    int f = 0;
    for (int r = 0; r < st.L; r += 2) {
        BitRow x = st.row(r);
        if (r + 2 <= st.L - 1) f ^= T(x, st.row(r + 2));
        if (r >= 2) f ^= T(x, x);
    }
    return f;
}

int gamma_phase_oracle(const BitGrid &s) { return f_B(s.suffix_parity()) ^ f_D(s); }

GateList gadget_gates(GadgetKind kind, int r, int c, int L) {
    GateList raw;
    auto in = [&](Cell q) { return q.r >= 0 && q.r < L && q.c >= 0 && q.c < L; };
    switch (kind) {
        case GadgetKind::SkipMinus:
        case GadgetKind::SkipPlus: {
            int sgn = kind == GadgetKind::SkipMinus ? -1 : 1;
            raw.push_back(Gate::cz({r + 1, c}, {r + 2, c}));
            raw.push_back(Gate::cnot({r, c + sgn}, {r + 1, c + sgn}));
            raw.push_back(Gate::cz({r + 1, c + 2 * sgn}, {r + 2, c + 2 * sgn}));
            raw.push_back(Gate::cnot({r, c + 3 * sgn}, {r + 1, c + 3 * sgn}));
            break;
        }
        case GadgetKind::Cross:
            raw.push_back(Gate::cz({r, c}, {r + 1, c}));
            break;
        case GadgetKind::Same:
            raw.push_back(Gate::cz({r, c - 1}, {r, c}));
            break;
        case GadgetKind::Z:
            if ((L - 1 - c) % 2 != 0) raw.push_back(Gate::z({r, c}));
            break;
    }
    GateList out;
    for (const Gate &g : raw) {
        if (in(g.a) && (g.arity() == 1 || in(g.b))) out.push_back(g);
    }
    return out;
}

namespace {

void assert_disjoint(const GateList &step, int L) {
    std::vector<char> used(L * L, 0);
    for (const Gate &g : step) {
        for (Cell q : {g.a, g.b}) {
            if (q.r < 0) continue;
            char &u = used[q.r * L + q.c];
            if (u) throw std::logic_error("pipe sweep: qubit receives two gates in one time step");
            u = 1;
        }
    }
}

GateList merge_steps(const std::vector<std::vector<GateList>> &sweeps, int L) {
    GateList out;
    size_t n = 0;
    for (const auto &s : sweeps) n = std::max(n, s.size());
    for (size_t t = 0; t < n; t++) {
        GateList step;
        for (const auto &s : sweeps) {
            if (t < s.size()) step.insert(step.end(), s[t].begin(), s[t].end());
        }
        assert_disjoint(step, L);
        out.insert(out.end(), step.begin(), step.end());
    }
    return out;
}

}  // namespace

std::vector<GateList> pipe_sweep_steps(int r, const std::vector<GadgetSpec> &fwd, const std::vector<GadgetSpec> &undo,
                                       int L) {
    std::vector<GateList> steps;
    auto run = [&](const std::vector<GadgetSpec> &gadgets, int t) {
        GateList step;
        if (t >= 0 && t <= L - 2) step.push_back(Gate::cnot({r, t}, {r, t + 1}));
        for (const auto &g : gadgets) {
            GateList gg = gadget_gates(g.kind, r, t + g.offset, L);
            step.insert(step.end(), gg.begin(), gg.end());
        }
        assert_disjoint(step, L);
        if (!step.empty()) steps.push_back(std::move(step));
    };
    // Gadget offsets are at most 5 and templates span 4 columns, so these ranges cover every in-grid gate.
    for (int t = 0; t <= L + 10; t++) run(fwd, t);
    for (int t = L - 2; t >= -12; t--) run(undo, t);
    return steps;
}

GateList pipe_sweep(int r, const std::vector<GadgetSpec> &fwd, const std::vector<GadgetSpec> &undo, int L) {
    GateList out;
    for (const auto &step : pipe_sweep_steps(r, fwd, undo, L)) out.insert(out.end(), step.begin(), step.end());
    return out;
}

GateList gamma_gates(int L) {
    if (L < 2) throw std::invalid_argument("build_gamma: L must be at least 2");
    GateList out;
    // Phase 1: column-suffix parities.
    for (int r = L - 2; r >= 0; r--) {
        for (int c = 0; c < L; c++) out.push_back(Gate::cnot({r + 1, c}, {r, c}));
    }
    // Phase 2: skip-row and same-row terms in the parity basis, batched by r mod 4.
    for (int batch : {0, 2}) {
        std::vector<std::vector<GateList>> sweeps;
        for (int r = batch; r < L; r += 4) {
            std::vector<GadgetSpec> fwd, undo;
            if (r + 2 <= L - 1) {
                fwd.push_back({GadgetKind::SkipMinus, -1});
                undo.push_back({GadgetKind::SkipPlus, +1});
            }
            if (r >= 2) {
                fwd.push_back({GadgetKind::Same, -5});
                undo.push_back({GadgetKind::Z, +5});
            }
            if (fwd.empty()) continue;
            sweeps.push_back(pipe_sweep_steps(r, fwd, undo, L));
        }
        GateList merged = merge_steps(sweeps, L);
        out.insert(out.end(), merged.begin(), merged.end());
    }
    // Phase 3: back to the original basis.
    for (int r = 0; r <= L - 2; r++) {
        for (int c = 0; c < L; c++) out.push_back(Gate::cnot({r + 1, c}, {r, c}));
    }
    // Phase 4: adjacent-row terms, all even rows at once. For odd L the last row gets the same-row pair alone.
    std::vector<std::vector<GateList>> sweeps;
    for (int r = 0; r + 1 <= L - 1; r += 2) {
        sweeps.push_back(pipe_sweep_steps(r, {{GadgetKind::Cross, -2}, {GadgetKind::Same, -3}},
                                          {{GadgetKind::Cross, +2}, {GadgetKind::Z, +3}}, L));
    }
    if (L % 2 == 1) sweeps.push_back(pipe_sweep_steps(L - 1, {{GadgetKind::Same, -3}}, {{GadgetKind::Z, +3}}, L));
    GateList merged = merge_steps(sweeps, L);
    out.insert(out.end(), merged.begin(), merged.end());
    return out;
}

Circuit build_gamma(int L) {
    Circuit c = schedule_greedy(gamma_gates(L), L, L);
    c.metadata["kind"] = "gamma";
    return c;
}

AffineForm AffineForm::variable(int n, int i) {
    AffineForm f(n);
    f.flip(i);
    return f;
}

AffineForm &AffineForm::operator^=(const AffineForm &o) {
    for (size_t w = 0; w < bits.size(); w++) bits[w] ^= o.bits[w];
    constant ^= o.constant;
    return *this;
}

PhasePolynomial::PhasePolynomial(int n)
    : n_(n), words_((n + 63) / 64), m_(static_cast<size_t>(n) * ((n + 63) / 64), 0), lin_(n) {}

void PhasePolynomial::add_product(const AffineForm &a, const AffineForm &b) {
    canonical_ = false;
    for (int w = 0; w < words_; w++) {
        uint64_t word = a.bits[w];
        while (word) {
            int i = w * 64 + std::countr_zero(word);
            word &= word - 1;
            uint64_t *row = &m_[static_cast<size_t>(i) * words_];
            for (int k = 0; k < words_; k++) row[k] ^= b.bits[k];
        }
    }
    if (a.constant) {
        for (int k = 0; k < words_; k++) lin_.bits[k] ^= b.bits[k];
    }
    if (b.constant) {
        for (int k = 0; k < words_; k++) lin_.bits[k] ^= a.bits[k];
    }
    lin_.constant ^= a.constant & b.constant;
}

void PhasePolynomial::add_affine(const AffineForm &a) { lin_ ^= a; }

void PhasePolynomial::canonicalize() {
    if (canonical_) return;
    auto get = [&](int i, int j) { return (m_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1; };
    std::vector<uint64_t> u(m_.size(), 0);
    for (int i = 0; i < n_; i++) {
        if (get(i, i)) lin_.flip(i);
        for (int j = i + 1; j < n_; j++) {
            if (get(i, j) ^ get(j, i)) u[static_cast<size_t>(i) * words_ + (j >> 6)] |= uint64_t{1} << (j & 63);
        }
    }
    m_.swap(u);
    canonical_ = true;
}

int PhasePolynomial::evaluate(const std::vector<uint8_t> &s) const {
    std::vector<uint64_t> packed(words_, 0);
    for (int i = 0; i < n_; i++) {
        if (s[i]) packed[i >> 6] |= uint64_t{1} << (i & 63);
    }
    int acc = lin_.constant;
    for (int i = 0; i < n_; i++) {
        if (!s[i]) continue;
        acc ^= (lin_.bits[i >> 6] >> (i & 63)) & 1;
        const uint64_t *row = &m_[static_cast<size_t>(i) * words_];
        for (int k = 0; k < words_; k++) acc ^= std::popcount(row[k] & packed[k]) & 1;
    }
    return acc;
}

bool PhasePolynomial::quad(int i, int j) const {
    if (!canonical_) throw std::logic_error("PhasePolynomial::quad on a non-canonical polynomial");
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return (m_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
}

bool PhasePolynomial::operator==(const PhasePolynomial &o) const {
    PhasePolynomial a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    return a.n_ == b.n_ && a.m_ == b.m_ && a.lin_ == b.lin_;
}

PhasePolynomial gamma_reference_polynomial(int L) {
    int n = L * L;
    PhasePolynomial f(n);
    auto s = [&](int r, int c) {
        AffineForm a(n);
        if (r >= 0 && r < L) a.flip(r * L + c);
        return a;
    };
    auto st = [&](int r, int c) {
        AffineForm a(n);
        for (int rr = std::max(r, 0); rr < L && r < L; rr++) a.flip(rr * L + c);
        return a;
    };
    auto add_T = [&](auto x, int rx, auto y, int ry) {
        for (int cp = 0; cp < L; cp++) {
            AffineForm yc = y(ry, cp);
            for (int p = 0; p < cp; p++) f.add_product(x(rx, p), yc);
        }
    };
    for (int r = 0; r < L; r += 2) {
        add_T(s, r, s, r);
        add_T(s, r, s, r + 1);
        if (r + 2 <= L - 1) add_T(st, r, st, r + 2);
        if (r >= 2) add_T(st, r, st, r);
    }
    f.canonicalize();
    return f;
}

PhasePolynomial extract_phase_polynomial(const GateList &gates, int L) {
    int n = L * L;
    std::vector<AffineForm> q;
    for (int i = 0; i < n; i++) q.push_back(AffineForm::variable(n, i));
    PhasePolynomial f(n);
    auto idx = [&](Cell c) { return c.r * L + c.c; };
    for (const Gate &g : gates) {
        switch (g.kind) {
            case GateKind::CNOT:
                q[idx(g.b)] ^= q[idx(g.a)];
                break;
            case GateKind::CZ:
                f.add_product(q[idx(g.a)], q[idx(g.b)]);
                break;
            case GateKind::Z:
                f.add_affine(q[idx(g.a)]);
                break;
            case GateKind::X:
                q[idx(g.a)].constant ^= 1;
                break;
            case GateKind::SWAP:
                std::swap(q[idx(g.a)], q[idx(g.b)]);
                break;
            case GateKind::FSWAP:
                f.add_product(q[idx(g.a)], q[idx(g.b)]);
                std::swap(q[idx(g.a)], q[idx(g.b)]);
                break;
            default:
                throw std::logic_error(std::string("extract_phase_polynomial: unsupported gate ") + gate_name(g.kind));
        }
    }
    for (int i = 0; i < n; i++) {
        if (!(q[i] == AffineForm::variable(n, i))) throw std::logic_error("extract_phase_polynomial: circuit is not diagonal");
    }
    f.canonicalize();
    return f;
}

std::vector<ParityPairResult> check_parity_encoding(const PhasePolynomial &poly, int L) {
    PhasePolynomial f = poly;
    f.canonicalize();
    int n = L * L;
    std::vector<ParityPairResult> out;
    for (int r = 0; r + 1 < L; r++) {
        for (int c = 0; c < L; c++) {
            int a = r * L + c, b = (r + 1) * L + c;
            // Linear part of f(s + e_a + e_b) + f(s): rows a and b of the symmetric quadratic matrix.
            std::vector<uint8_t> coef(n, 0);
            for (int i = 0; i < n; i++) coef[i] = f.quad(a, i) ^ f.quad(b, i);
            int constant = f.quad(a, b) ^ f.lin(a) ^ f.lin(b);
            // Restrict to s_a + s_b = 1 by substituting s_b = 1 + s_a.
            constant ^= coef[b];
            coef[a] ^= coef[b];
            coef[b] = 0;
            int ja = snake_index(r, c, L), jb = snake_index(r + 1, c, L);
            bool pass = constant == 0;
            for (int i = 0; i < n && pass; i++) {
                int j = snake_index(i / L, i % L, L);
                bool want = j > std::min(ja, jb) && j < std::max(ja, jb);
                if (coef[i] != want) pass = false;
            }
            out.push_back({r, c, pass});
        }
    }
    return out;
}

std::vector<ParityPairResult> check_parity_encoding(int L) {
    return check_parity_encoding(extract_phase_polynomial(gamma_gates(L), L), L);
}

}  // namespace fermroute

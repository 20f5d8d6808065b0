// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/verify.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "fermroute/simd.hpp"

namespace fermroute {

using cd = std::complex<double>;

Eigen::MatrixXcd gate_matrix(const Gate &g) {
    const cd I(0, 1);
    Eigen::MatrixXcd m;
    switch (g.kind) {
        case GateKind::Z:
            m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 0) = 1;
            m(1, 1) = -1;
            return m;
        case GateKind::X:
            m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 1) = m(1, 0) = 1;
            return m;
        case GateKind::H:
            m = Eigen::MatrixXcd::Constant(2, 2, 1.0 / std::sqrt(2.0));
            m(1, 1) *= -1.0;
            return m;
        case GateKind::S:
            m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 0) = 1;
            m(1, 1) = I;
            return m;
        case GateKind::RZ:
            m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 0) = std::exp(-I * g.theta / 2.0);
            m(1, 1) = std::exp(I * g.theta / 2.0);
            return m;
        case GateKind::PHASE:
            m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 0) = 1;
            m(1, 1) = std::exp(I * g.theta);
            return m;
        case GateKind::CNOT:
            m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = m(1, 1) = 1;
            m(3, 2) = m(2, 3) = 1;
            return m;
        case GateKind::CZ:
            m = Eigen::MatrixXcd::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        case GateKind::SWAP:
            m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = m(3, 3) = 1;
            m(1, 2) = m(2, 1) = 1;
            return m;
        case GateKind::FSWAP:
            m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = 1;
            m(3, 3) = -1;
            m(1, 2) = m(2, 1) = 1;
            return m;
        case GateKind::GIVENS: {
            double c = std::cos(g.theta), s = std::sin(g.theta);
            m = Eigen::MatrixXcd::Identity(4, 4);
            m(2, 2) = c;
            m(1, 2) = s;
            m(2, 1) = -s;
            m(1, 1) = c;
            return m;
        }
    }
    throw std::invalid_argument("gate_matrix: unknown gate");
}

Amplitudes statevector_simulate(const GateList &gates, int rows, int cols, const Amplitudes &init) {
    int n = rows * cols;
    if (n > kMaxStatevectorQubits) throw std::invalid_argument("statevector_simulate: too many qubits");
    if (init.size() != (int64_t{1} << n)) throw std::invalid_argument("statevector_simulate: state size mismatch");
    Amplitudes psi = init;
    const int64_t dim = psi.size();
    for (const Gate &g : gates) {
        Eigen::MatrixXcd m = gate_matrix(g);
        int qa = g.a.r * cols + g.a.c;
        if (g.arity() == 1) {
            int64_t bit = int64_t{1} << qa;
            for (int64_t i = 0; i < dim; i++) {
                if (i & bit) continue;
                cd a0 = psi[i], a1 = psi[i | bit];
                psi[i] = m(0, 0) * a0 + m(0, 1) * a1;
                psi[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
            }
        } else {
            int qb = g.b.r * cols + g.b.c;
            int64_t ba = int64_t{1} << qa, bb = int64_t{1} << qb;
            for (int64_t i = 0; i < dim; i++) {
                if (i & (ba | bb)) continue;
                int64_t idx[4] = {i, i | bb, i | ba, i | ba | bb};
                cd v[4];
                for (int k = 0; k < 4; k++) v[k] = psi[idx[k]];
                for (int r = 0; r < 4; r++) {
                    cd acc = 0;
                    for (int k = 0; k < 4; k++) acc += m(r, k) * v[k];
                    psi[idx[r]] = acc;
                }
            }
        }
    }
    return psi;
}

Eigen::MatrixXcd circuit_unitary(const GateList &gates, int rows, int cols) {
    int n = rows * cols;
    if (n > 12) throw std::invalid_argument("circuit_unitary: too many qubits");
    int64_t dim = int64_t{1} << n;
    Eigen::MatrixXcd u(dim, dim);
    for (int64_t j = 0; j < dim; j++) {
        Amplitudes e = Amplitudes::Zero(dim);
        e[j] = 1;
        u.col(j) = statevector_simulate(gates, rows, cols, e);
    }
    return u;
}

bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index bi = 0, bj = 0;
    a.cwiseAbs().maxCoeff(&bi, &bj);
    if (std::abs(b(bi, bj)) < 1e-14) return a.norm() < tol;
    cd ph = a(bi, bj) / b(bi, bj);
    ph /= std::abs(ph);
    return (a - ph * b).cwiseAbs().maxCoeff() < tol;
}

SparseState sparse_simulate(const GateList &gates, int cols, SparseState psi, double drop) {
    for (const Gate &g : gates) {
        Eigen::MatrixXcd m = gate_matrix(g);
        int qa = g.a.r * cols + g.a.c;
        int qb = g.arity() == 2 ? g.b.r * cols + g.b.c : -1;
        if (qa >= 64 || qb >= 64) throw std::invalid_argument("sparse_simulate: at most 64 qubits");
        SparseState out;
        out.reserve(psi.size() * 2);
        for (const auto &[key, amp] : psi) {
            if (qb < 0) {
                uint64_t bit = uint64_t{1} << qa;
                int in = (key & bit) ? 1 : 0;
                for (int o = 0; o < 2; o++) {
                    if (m(o, in) != cd(0)) out[o ? (key | bit) : (key & ~bit)] += m(o, in) * amp;
                }
            } else {
                uint64_t ba = uint64_t{1} << qa, bb = uint64_t{1} << qb;
                int in = ((key & ba) ? 2 : 0) + ((key & bb) ? 1 : 0);
                uint64_t base = key & ~(ba | bb);
                for (int o = 0; o < 4; o++) {
                    if (m(o, in) != cd(0)) out[base | ((o & 2) ? ba : 0) | ((o & 1) ? bb : 0)] += m(o, in) * amp;
                }
            }
        }
        std::erase_if(out, [&](const auto &kv) { return std::abs(kv.second) < drop; });
        psi = std::move(out);
    }
    return psi;
}

PhaseState simulate_phase_circuit(const GateList &gates, int cols, std::vector<uint8_t> bits) {
    PhaseState st;
    auto q = [&](Cell c) { return c.r * cols + c.c; };
    for (const Gate &g : gates) {
        switch (g.kind) {
            case GateKind::CNOT:
                bits[q(g.b)] ^= bits[q(g.a)];
                break;
            case GateKind::CZ:
                st.phase += 2 * (bits[q(g.a)] & bits[q(g.b)]);
                break;
            case GateKind::Z:
                st.phase += 2 * bits[q(g.a)];
                break;
            case GateKind::X:
                bits[q(g.a)] ^= 1;
                break;
            case GateKind::S:
                st.phase += bits[q(g.a)];
                break;
            case GateKind::SWAP:
                std::swap(bits[q(g.a)], bits[q(g.b)]);
                break;
            case GateKind::FSWAP:
                st.phase += 2 * (bits[q(g.a)] & bits[q(g.b)]);
                std::swap(bits[q(g.a)], bits[q(g.b)]);
                break;
            default:
                throw std::invalid_argument(std::string("simulate_phase_circuit: gate outside the phase class: ") +
                                            gate_name(g.kind));
        }
    }
    st.phase &= 3;
    st.bits = std::move(bits);
    return st;
}

void simulate_phase_batch(const GateList &gates, int cols, PhaseBatch &b) {
    const simd::Kernels &k = simd::active_kernels();
    const size_t w = b.words;
    b.hi.assign(w, 0);
    b.lo.assign(w, 0);
    auto p = [&](Cell c) { return b.planes[c.r * cols + c.c].data(); };
    for (const Gate &g : gates) {
        switch (g.kind) {
            case GateKind::CNOT:
                k.xor_into(p(g.b), p(g.a), w);
                break;
            case GateKind::CZ:
                k.and_xor_into(b.hi.data(), p(g.a), p(g.b), w);
                break;
            case GateKind::Z:
                k.xor_into(b.hi.data(), p(g.a), w);
                break;
            case GateKind::X:
                k.invert(p(g.a), w);
                break;
            case GateKind::S:
                k.phase_add_i(b.hi.data(), b.lo.data(), p(g.a), w);
                break;
            case GateKind::SWAP:
                k.swap_words(p(g.a), p(g.b), w);
                break;
            case GateKind::FSWAP:
                k.and_xor_into(b.hi.data(), p(g.a), p(g.b), w);
                k.swap_words(p(g.a), p(g.b), w);
                break;
            default:
                throw std::invalid_argument(std::string("simulate_phase_batch: gate outside the phase class: ") +
                                            gate_name(g.kind));
        }
    }
}

PhaseState fperm_oracle(const Permutation &pi, const std::vector<uint8_t> &s) {
    int n = pi.size();
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("fperm_oracle: size mismatch");
    PhaseState st;
    st.bits.assign(n, 0);
    // Occupied inversions: pairs i < j, both occupied, pi(i) > pi(j). Counted with a Fenwick tree over pi values.
    std::vector<int> tree(n + 1, 0);
    int64_t count = 0;
    for (int j = 0; j < n; j++) {
        st.bits[pi(j)] = s[j];
        if (!s[j]) continue;
        // occupied i < j with pi(i) > pi(j)
        int64_t le = 0;
        for (int x = pi(j) + 1; x > 0; x -= x & -x) le += tree[x];
        int64_t seen = 0;
        for (int x = n; x > 0; x -= x & -x) seen += tree[x];
        count += seen - le;
        for (int x = pi(j) + 1; x <= n; x += x & -x) tree[x]++;
    }
    st.phase = static_cast<int>((count & 1) * 2);
    return st;
}

std::vector<uint8_t> modes_to_qubits(const std::vector<uint8_t> &modes, int L) {
    std::vector<uint8_t> q(L * L);
    for (int j = 0; j < L * L; j++) {
        Cell c = snake_cell(j, L);
        q[c.r * L + c.c] = modes[j];
    }
    return q;
}

std::vector<uint8_t> qubits_to_modes(const std::vector<uint8_t> &qubits, int L) {
    std::vector<uint8_t> m(L * L);
    for (int j = 0; j < L * L; j++) {
        Cell c = snake_cell(j, L);
        m[j] = qubits[c.r * L + c.c];
    }
    return m;
}

void PauliString::set_x(int q, bool v) {
    uint64_t bit = uint64_t{1} << (q & 63);
    x_[q >> 6] = v ? (x_[q >> 6] | bit) : (x_[q >> 6] & ~bit);
}

void PauliString::set_z(int q, bool v) {
    uint64_t bit = uint64_t{1} << (q & 63);
    z_[q >> 6] = v ? (z_[q >> 6] | bit) : (z_[q >> 6] & ~bit);
}

std::string PauliString::str() const {
    std::string letters;
    int ys = 0;
    for (int q = 0; q < n_; q++) {
        bool xb = x(q), zb = z(q);
        letters += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
        ys += xb && zb;
    }
    static const char *signs[] = {"+", "+i", "-", "-i"};
    return signs[(e_ - ys + 400) & 3] + letters;
}

PauliString PauliString::operator*(const PauliString &o) const {
    if (n_ != o.n_) throw std::invalid_argument("PauliString: size mismatch");
    PauliString out(n_);
    int swaps = 0;
    for (size_t w = 0; w < x_.size(); w++) {
        swaps += std::popcount(z_[w] & o.x_[w]);
        out.x_[w] = x_[w] ^ o.x_[w];
        out.z_[w] = z_[w] ^ o.z_[w];
    }
    out.e_ = (e_ + o.e_ + 2 * swaps) & 3;
    return out;
}

bool PauliString::commutes(const PauliString &o) const {
    int acc = 0;
    for (size_t w = 0; w < x_.size(); w++) acc += std::popcount((x_[w] & o.z_[w]) ^ (z_[w] & o.x_[w]));
    return acc % 2 == 0;
}

Amplitudes apply_pauli(const PauliString &p, const Amplitudes &psi) {
    uint64_t xm = 0, zm = 0;
    if (p.size() > 62) throw std::invalid_argument("apply_pauli: too many qubits");
    for (int q = 0; q < p.size(); q++) {
        if (p.x(q)) xm |= uint64_t{1} << q;
        if (p.z(q)) zm |= uint64_t{1} << q;
    }
    if (psi.size() != (int64_t{1} << p.size())) throw std::invalid_argument("apply_pauli: state size mismatch");
    static const cd powers[4] = {1, cd(0, 1), -1, cd(0, -1)};
    Amplitudes out(psi.size());
    // i^e X^x Z^z |b> = i^e (-1)^{z.b} |b ^ x>
    for (int64_t b = 0; b < psi.size(); b++) {
        int sign = std::popcount(static_cast<uint64_t>(b) & zm) & 1;
        out[static_cast<int64_t>(static_cast<uint64_t>(b) ^ xm)] = powers[(p.phase() + 2 * sign) & 3] * psi[b];
    }
    return out;
}

PauliString conjugate_pauli(const GateList &gates, int cols, PauliString p) {
    auto q = [&](Cell c) { return c.r * cols + c.c; };
    auto cz = [&](int a, int b) {
        bool xa = p.x(a), xb = p.x(b);
        p.set_z(a, p.z(a) ^ xb);
        p.set_z(b, p.z(b) ^ xa);
        if (xa && xb) p.add_phase(2);
    };
    auto swap = [&](int a, int b) {
        bool xa = p.x(a), za = p.z(a);
        p.set_x(a, p.x(b));
        p.set_z(a, p.z(b));
        p.set_x(b, xa);
        p.set_z(b, za);
    };
    for (const Gate &g : gates) {
        int a = q(g.a);
        switch (g.kind) {
            case GateKind::H: {
                bool xa = p.x(a), za = p.z(a);
                if (xa && za) p.add_phase(2);
                p.set_x(a, za);
                p.set_z(a, xa);
                break;
            }
            case GateKind::S:
                if (p.x(a)) {
                    p.add_phase(1);
                    p.set_z(a, !p.z(a));
                }
                break;
            case GateKind::X:
                if (p.z(a)) p.add_phase(2);
                break;
            case GateKind::Z:
                if (p.x(a)) p.add_phase(2);
                break;
            case GateKind::CNOT: {
                int b = q(g.b);
                p.set_x(b, p.x(b) ^ p.x(a));
                p.set_z(a, p.z(a) ^ p.z(b));
                break;
            }
            case GateKind::CZ:
                cz(a, q(g.b));
                break;
            case GateKind::SWAP:
                swap(a, q(g.b));
                break;
            case GateKind::FSWAP:
                cz(a, q(g.b));
                swap(a, q(g.b));
                break;
            default:
                throw std::invalid_argument(std::string("conjugate_pauli: non-Clifford gate ") + gate_name(g.kind));
        }
    }
    return p;
}

std::vector<PauliString> jw_majoranas(const std::vector<int> &qubit_of_mode, int num_qubits) {
    std::vector<PauliString> out;
    int n = static_cast<int>(qubit_of_mode.size());
    for (int j = 0; j < n; j++) {
        PauliString even(num_qubits);
        for (int l = 0; l < j; l++) even.set_z(qubit_of_mode[l], true);
        even.set_x(qubit_of_mode[j], true);
        PauliString odd = even;
        odd.set_z(qubit_of_mode[j], true);
        odd.add_phase(1);
        out.push_back(even);
        out.push_back(odd);
    }
    return out;
}

std::vector<PauliString> grid_jw_majoranas(int L) {
    std::vector<int> q(L * L);
    for (int j = 0; j < L * L; j++) {
        Cell c = snake_cell(j, L);
        q[j] = c.r * L + c.c;
    }
    return jw_majoranas(q, L * L);
}

MajoranaReport check_majorana_permutation(const GateList &gates, const Permutation &pi, int L) {
    MajoranaReport rep;
    std::vector<PauliString> gam = grid_jw_majoranas(L);
    int n = L * L;
    if (pi.size() != n) throw std::invalid_argument("check_majorana_permutation: size mismatch");
    for (int j = 0; j < n; j++) {
        for (int a = 0; a < 2; a++) {
            PauliString got = conjugate_pauli(gates, L, gam[2 * j + a]);
            const PauliString &want = gam[2 * pi(j) + a];
            rep.checked++;
            if (!(got == want)) {
                if (rep.failed == 0) {
                    rep.first_failure = "gamma_" + std::to_string(2 * j + a) + ": got " + got.str() + " want " + want.str();
                }
                rep.failed++;
            }
        }
    }
    return rep;
}

MajoranaReport check_fperm_basis_states(const GateList &gates, const Permutation &pi, int L, int64_t samples,
                                        uint64_t seed) {
    int n = L * L;
    if (pi.size() != n) throw std::invalid_argument("check_fperm_basis_states: size mismatch");
    MajoranaReport rep;
    bool exhaustive = n < 63 && (int64_t{1} << n) <= samples;
    int64_t total = exhaustive ? int64_t{1} << n : samples;
    std::mt19937_64 rng(seed);
    std::vector<uint8_t> modes(n);
    for (int64_t m = 0; m < total; m++) {
        for (int i = 0; i < n; i++) modes[i] = exhaustive ? (m >> i) & 1 : rng() & 1;
        PhaseState want = fperm_oracle(pi, modes);
        PhaseState got = simulate_phase_circuit(gates, L, modes_to_qubits(modes, L));
        got.bits = qubits_to_modes(got.bits, L);
        rep.checked++;
        if (!(got == want) && rep.failed++ == 0) {
            std::string occ;
            for (uint8_t b : modes) occ += b ? '1' : '0';
            rep.first_failure = "occupation " + occ + ": phase " + std::to_string(got.phase) + " want " +
                                std::to_string(want.phase) + (got.bits == want.bits ? "" : ", wrong occupation");
        }
    }
    return rep;
}

double estimate_fidelity(const Metrics &m, double p2q) {
    return std::pow(1.0 - p2q, static_cast<double>(m.gates)) * std::pow(1.0 - 0.1 * p2q, static_cast<double>(m.idle));
}

}  // namespace fermroute

// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermroute/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fermroute {

int snake_index(int r, int c, int L) {
    if (L < 1 || r < 0 || c < 0 || r >= L || c >= L) {
        throw std::domain_error("snake_index: cell (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside an L=" + std::to_string(L) + " grid");
    }
    return r * L + ((r & 1) ? (L - 1 - c) : c);
}

Cell snake_cell(int j, int L) {
    if (L < 1 || j < 0 || j >= L * L) {
        throw std::domain_error("snake_cell: index " + std::to_string(j) + " out of range");
    }
    int r = j / L;
    int o = j % L;
    return {r, (r & 1) ? (L - 1 - o) : o};
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<char> seen(map_.size(), 0);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]) {
            throw std::invalid_argument("Permutation: map is not a bijection");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; i++) m[i] = n - 1 - i;
    return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); i++) {
        if (map_[i] != i) return false;
    }
    return true;
}

Permutation compose(const Permutation &p, const Permutation &s) {
    if (p.size() != s.size()) throw std::invalid_argument("compose: length mismatch");
    std::vector<int> m(p.size());
    for (int i = 0; i < p.size(); i++) m[i] = p(s(i));
    return Permutation(std::move(m));
}

Permutation invert(const Permutation &p) {
    std::vector<int> m(p.size());
    for (int i = 0; i < p.size(); i++) m[p(i)] = i;
    return Permutation(std::move(m));
}

InversionSet inversion_set(const Permutation &p) {
    InversionSet out;
    for (int i = 0; i < p.size(); i++) {
        for (int j = i + 1; j < p.size(); j++) {
            if (p(i) > p(j)) out.emplace_back(i, j);
        }
    }
    return out;
}

static int64_t merge_count(std::vector<int> &a, std::vector<int> &tmp, int lo, int hi) {
    if (hi - lo < 2) return 0;
    int mid = (lo + hi) / 2;
    int64_t n = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
    int i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
            tmp[k++] = a[i++];
        } else {
            n += mid - i;
            tmp[k++] = a[j++];
        }
    }
    while (i < mid) tmp[k++] = a[i++];
    while (j < hi) tmp[k++] = a[j++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
    return n;
}

int64_t inversion_count(const Permutation &p) {
    std::vector<int> a = p.map();
    std::vector<int> tmp(a.size());
    return merge_count(a, tmp, 0, p.size());
}

Permutation transpose_permutation(int L) {
    std::vector<int> m(L * L);
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) m[snake_index(r, c, L)] = snake_index(c, r, L);
    }
    return Permutation(std::move(m));
}

Permutation random_permutation(int n, std::mt19937_64 &rng) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    // Fisher-Yates with explicit draws so the sequence does not depend on the STL's shuffle.
    for (int i = n - 1; i > 0; i--) {
        int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(m[i], m[j]);
    }
    return Permutation(std::move(m));
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

void rot(int64_t n, int64_t &x, int64_t &y, int64_t rx, int64_t ry) {
    if (ry == 0) {
        if (rx == 1) {
            x = n - 1 - x;
            y = n - 1 - y;
        }
        std::swap(x, y);
    }
}

Cell square_d2xy(int64_t n, uint64_t d) {
    int64_t x = 0, y = 0;
    uint64_t t = d;
    for (int64_t s = 1; s < n; s *= 2) {
        int64_t rx = 1 & (t / 2);
        int64_t ry = 1 & (t ^ rx);
        rot(s, x, y, rx, ry);
        x += s * rx;
        y += s * ry;
        t /= 4;
    }
    return {static_cast<int>(x), static_cast<int>(y)};
}

uint64_t square_xy2d(int64_t n, int64_t x, int64_t y) {
    uint64_t d = 0;
    for (int64_t s = n / 2; s > 0; s /= 2) {
        int64_t rx = (x & s) > 0;
        int64_t ry = (y & s) > 0;
        d += static_cast<uint64_t>(s) * s * ((3 * rx) ^ ry);
        rot(n, x, y, rx, ry);
    }
    return d;
}

}  // namespace

HilbertCurve::HilbertCurve(int k) : k_(k) {
    if (k < 0 || k > 40) throw std::domain_error("HilbertCurve: order out of range");
    rows_ = 1 << ((k + 1) / 2);
    cols_ = 1 << (k / 2);
}

Cell HilbertCurve::cell(uint64_t i) const {
    if (i >= size()) throw std::domain_error("HilbertCurve: index out of range");
    int64_t side = cols_;
    if (k_ % 2 == 0) return square_d2xy(side, i);
    uint64_t half = static_cast<uint64_t>(side) * side;
    if (i < half) return square_d2xy(side, i);
    Cell c = square_d2xy(side, i - half);
    return {c.r + static_cast<int>(side), c.c};
}

uint64_t HilbertCurve::index(Cell cell) const {
    if (cell.r < 0 || cell.c < 0 || cell.r >= rows_ || cell.c >= cols_) {
        throw std::domain_error("HilbertCurve: cell out of range");
    }
    int64_t side = cols_;
    if (cell.r < side) return square_xy2d(side, cell.r, cell.c);
    return static_cast<uint64_t>(side) * side + square_xy2d(side, cell.r - side, cell.c);
}

}  // namespace fermroute

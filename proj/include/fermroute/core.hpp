// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fermroute {

struct Cell {
    int r = 0;
    int c = 0;
    bool operator==(const Cell &) const = default;
};

struct GridSpec {
    int L = 1;
    int N() const { return L * L; }
};

// Snake (boustrophedon) Jordan-Wigner order on an L x L grid.
int snake_index(int r, int c, int L);
Cell snake_cell(int j, int L);

class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> map);

    static Permutation identity(int n);
    static Permutation reversal(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[i]; }
    const std::vector<int> &map() const { return map_; }
    bool is_identity() const;
    bool operator==(const Permutation &) const = default;

   private:
    std::vector<int> map_;
};

// compose(p, s)(i) = p(s(i)).
Permutation compose(const Permutation &p, const Permutation &s);
Permutation invert(const Permutation &p);

using InversionSet = std::vector<std::pair<int, int>>;
InversionSet inversion_set(const Permutation &p);
// Merge-sort count, O(n log n).
int64_t inversion_count(const Permutation &p);

// JW-index permutation realizing the grid transpose (r,c) -> (c,r).
Permutation transpose_permutation(int L);
Permutation random_permutation(int n, std::mt19937_64 &rng);

// Derives the i-th child seed from a parent seed (splitmix64 finalizer).
uint64_t derive_seed(uint64_t seed, uint64_t index);

// H_k over a 2^ceil(k/2) x 2^floor(k/2) rectangle (rows x cols).
// Even k: the classic square recursion, starting at (0,0) and ending at (side-1,0).
// Odd k: two order-(k-1) squares stacked vertically.
class HilbertCurve {
   public:
    explicit HilbertCurve(int k);

    int order() const { return k_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint64_t size() const { return uint64_t{1} << k_; }

    Cell cell(uint64_t i) const;
    uint64_t index(Cell cell) const;

   private:
    int k_;
    int rows_;
    int cols_;
};

}  // namespace fermroute

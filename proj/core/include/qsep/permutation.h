// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSEP_PERMUTATION_H
#define QSEP_PERMUTATION_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsep/state.h"

namespace qsep {

/// A bijection on qubit positions 1..n.
///
/// Acting on a state, the basis bit at position p moves to position (*this)(p).
class QubitPermutation {
   public:
    /// `mapping[p - 1]` is the image of position p. Throws unless a bijection on 1..n.
    explicit QubitPermutation(std::vector<int> mapping);

    static QubitPermutation identity(int n);
    /// Swaps positions a and b.
    static QubitPermutation transposition(int n, int a, int b);

    int size() const {
        return static_cast<int>(mapping_.size());
    }
    int operator()(int position) const {
        return mapping_[position - 1];
    }
    const std::vector<int> &mapping() const {
        return mapping_;
    }
    bool is_identity() const;

    bool operator==(const QubitPermutation &other) const = default;

    /// One-line array form, e.g. "[2,1,3]".
    std::string str() const;

   private:
    std::vector<int> mapping_;
};

/// (outer ∘ inner): apply(compose(outer, inner), s) == apply(outer, apply(inner, s)).
QubitPermutation compose(const QubitPermutation &outer, const QubitPermutation &inner);
QubitPermutation inverse(const QubitPermutation &perm);

/// Maps basis indices under a qubit permutation using per-byte lookup tables.
class BasisIndexMap {
   public:
    explicit BasisIndexMap(const QubitPermutation &perm);

    uint64_t operator()(uint64_t index) const {
        uint64_t out = 0;
        for (size_t b = 0; b < tables_.size(); b++) {
            out |= tables_[b][(index >> (8 * b)) & 0xFF];
        }
        return out;
    }

   private:
    std::vector<std::array<uint64_t, 256>> tables_;
};

/// The state with its qubits relabeled: bit at position p moves to position perm(p).
PureState apply(const QubitPermutation &perm, const PureState &state);

/// Writes the permuted amplitudes of `in` into `out` (sizes must match and equal 2^perm.size()).
void apply_into(const QubitPermutation &perm, std::span<const amp_t> in, std::span<amp_t> out);

/// An unordered split of 1..n into a subset and its complement.
///
/// `left` is the canonical representative: the smaller side, or the side
/// containing qubit 1 when both have n/2 qubits. `mover` carries `left` onto
/// positions 1..|left|, preserving the ascending order of `left`.
struct Bipartition {
    int num_qubits;
    QubitLabelSet left;
    QubitLabelSet right;
    QubitPermutation mover;

    /// Width at which the unpermuted coefficient vector can test this split,
    /// or 0 if some side is not a prefix {1..w} of the qubit order.
    int prefix_width() const;

    bool operator==(const Bipartition &other) const = default;
    /// "{1,3}|{2,4}".
    std::string str() const;
};

/// Builds the canonical bipartition separating `subset` from its complement in 1..n.
Bipartition make_bipartition(int n, const QubitLabelSet &subset);

/// The transposition chain (k_l, l)...(k_2, 2)(k_1, 1) for ascending labels k_1 < ... < k_l.
QubitPermutation leading_mover(int n, const QubitLabelSet &subset);

/// All 2^(n-1) - 1 canonical bipartitions of n qubits, ordered by |left| and
/// then lexicographically by `left`.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// 2^(n-1) - 1: number of bipartitions of n qubits.
uint64_t bipartition_count(int n);

/// 2^(n-1) - (n-1): number of distinct permuted coefficient vectors needed to
/// test every bipartition, since all n-1 prefix widths share the unpermuted vector.
uint64_t permutation_budget(int n);

}  // namespace qsep

#endif

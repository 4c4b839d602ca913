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

#include "qsep/permutation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsep {

QubitPermutation::QubitPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    int n = static_cast<int>(mapping_.size());
    if (n < 1) {
        throw std::invalid_argument("permutation must act on at least one qubit");
    }
    std::vector<bool> seen(n + 1, false);
    for (int p : mapping_) {
        if (p < 1 || p > n || seen[p]) {
            throw std::invalid_argument("not a bijection on 1..n: " + str());
        }
        seen[p] = true;
    }
}

QubitPermutation QubitPermutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 1);
    return QubitPermutation(std::move(m));
}

QubitPermutation QubitPermutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) {
        throw std::invalid_argument("transposition positions out of range");
    }
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 1);
    std::swap(m[a - 1], m[b - 1]);
    return QubitPermutation(std::move(m));
}

bool QubitPermutation::is_identity() const {
    for (size_t k = 0; k < mapping_.size(); k++) {
        if (mapping_[k] != static_cast<int>(k) + 1) {
            return false;
        }
    }
    return true;
}

std::string QubitPermutation::str() const {
    std::string out = "[";
    for (size_t k = 0; k < mapping_.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(mapping_[k]);
    }
    return out + "]";
}

QubitPermutation compose(const QubitPermutation &outer, const QubitPermutation &inner) {
    if (outer.size() != inner.size()) {
        throw std::invalid_argument("compose: permutation size mismatch");
    }
    std::vector<int> m(inner.size());
    for (int p = 1; p <= inner.size(); p++) {
        m[p - 1] = outer(inner(p));
    }
    return QubitPermutation(std::move(m));
}

QubitPermutation inverse(const QubitPermutation &perm) {
    std::vector<int> m(perm.size());
    for (int p = 1; p <= perm.size(); p++) {
        m[perm(p) - 1] = p;
    }
    return QubitPermutation(std::move(m));
}

BasisIndexMap::BasisIndexMap(const QubitPermutation &perm) {
    int n = perm.size();
    tables_.resize((n + 7) / 8);
    for (size_t b = 0; b < tables_.size(); b++) {
        for (uint64_t v = 0; v < 256; v++) {
            uint64_t out = 0;
            for (int j = 0; j < 8; j++) {
                int bit = static_cast<int>(8 * b) + j;
                if (bit >= n || !((v >> j) & 1)) {
                    continue;
                }
                // Integer bit q holds position n - q.
                int position = n - bit;
                out |= uint64_t{1} << (n - perm(position));
            }
            tables_[b][v] = out;
        }
    }
}

void apply_into(const QubitPermutation &perm, std::span<const amp_t> in, std::span<amp_t> out) {
    uint64_t dim = uint64_t{1} << perm.size();
    if (in.size() != dim || out.size() != dim) {
        throw std::invalid_argument("apply: permutation acts on " + std::to_string(perm.size()) +
                                    " qubits but the state has " + std::to_string(in.size()) + " amplitudes");
    }
    if (perm.is_identity()) {
        std::copy(in.begin(), in.end(), out.begin());
        return;
    }
    // Trailing positions fixed by the permutation keep their bits, so runs of
    // 2^fixed consecutive amplitudes move together.
    int n = perm.size();
    int fixed = 0;
    while (fixed < n && perm(n - fixed) == n - fixed) {
        fixed++;
    }
    BasisIndexMap map(perm);
    uint64_t run = uint64_t{1} << fixed;
    for (uint64_t x = 0; x < dim; x += run) {
        std::copy_n(in.begin() + x, run, out.begin() + map(x));
    }
}

PureState apply(const QubitPermutation &perm, const PureState &state) {
    if (perm.size() != state.num_qubits()) {
        throw std::invalid_argument("apply: permutation on " + std::to_string(perm.size()) +
                                    " qubits applied to a " + std::to_string(state.num_qubits()) + "-qubit state");
    }
    std::vector<amp_t> out(state.dim());
    apply_into(perm, state.amplitudes(), out);
    return PureState(state.num_qubits(), std::move(out));
}

namespace {

bool is_prefix(const QubitLabelSet &s) {
    return s.front() == 1 && s.back() == static_cast<int>(s.size());
}

}  // namespace

int Bipartition::prefix_width() const {
    if (is_prefix(left)) {
        return static_cast<int>(left.size());
    }
    if (is_prefix(right)) {
        return static_cast<int>(right.size());
    }
    return 0;
}

std::string Bipartition::str() const {
    return left.str() + "|" + right.str();
}

QubitPermutation leading_mover(int n, const QubitLabelSet &subset) {
    QubitPermutation acc = QubitPermutation::identity(n);
    for (size_t k = 0; k < subset.size(); k++) {
        int target = static_cast<int>(k) + 1;
        if (subset[k] != target) {
            acc = compose(QubitPermutation::transposition(n, subset[k], target), acc);
        }
    }
    return acc;
}

Bipartition make_bipartition(int n, const QubitLabelSet &subset) {
    if (subset.empty() || subset.back() > n || static_cast<int>(subset.size()) >= n) {
        throw std::invalid_argument("bipartition side must be a proper non-empty subset of 1..n");
    }
    QubitLabelSet left = subset;
    QubitLabelSet right = subset.complement(n);
    if (left.size() > right.size() || (left.size() == right.size() && !left.contains(1))) {
        std::swap(left, right);
    }
    QubitPermutation mover = leading_mover(n, left);
    return Bipartition{n, std::move(left), std::move(right), std::move(mover)};
}

uint64_t bipartition_count(int n) {
    if (n < 2 || n > 63) {
        throw std::invalid_argument("bipartitions need 2 <= n <= 63");
    }
    return (uint64_t{1} << (n - 1)) - 1;
}

uint64_t permutation_budget(int n) {
    if (n < 2 || n > 63) {
        throw std::invalid_argument("permutation budget needs 2 <= n <= 63");
    }
    return (uint64_t{1} << (n - 1)) - static_cast<uint64_t>(n - 1);
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("enumerate_bipartitions needs 2 <= n <= " + std::to_string(kMaxQubits));
    }
    std::vector<Bipartition> out;
    out.reserve(bipartition_count(n));
    for (int size = 1; size <= n / 2; size++) {
        bool half = 2 * size == n;
        // Lexicographic combinations of `size` labels from 1..n.
        std::vector<int> combo(size);
        std::iota(combo.begin(), combo.end(), 1);
        while (true) {
            if (!half || combo[0] == 1) {
                QubitLabelSet left(combo);
                out.push_back(Bipartition{n, left, left.complement(n), leading_mover(n, left)});
            }
            int k = size - 1;
            while (k >= 0 && combo[k] == n - size + k + 1) {
                k--;
            }
            if (k < 0) {
                break;
            }
            combo[k]++;
            for (int j = k + 1; j < size; j++) {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    return out;
}

}  // namespace qsep

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

#ifndef QSEP_BLOCKS_H
#define QSEP_BLOCKS_H

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qsep/state.h"

namespace qsep {

constexpr double kDefaultTolerance = 1e-9;

/// A coefficient vector viewed as 2^width stacked blocks of length 2^(n - width).
/// Block l covers amplitudes [l * block_len, (l + 1) * block_len).
class BlockMatrix {
   public:
    /// Does not copy; `amplitudes` must outlive the view.
    BlockMatrix(std::span<const amp_t> amplitudes, int num_qubits, int width);

    int width() const {
        return width_;
    }
    size_t num_blocks() const {
        return size_t{1} << width_;
    }
    size_t block_len() const {
        return amplitudes_.size() >> width_;
    }
    std::span<const amp_t> block(size_t l) const {
        return amplitudes_.subspan(l * block_len(), block_len());
    }

   private:
    std::span<const amp_t> amplitudes_;
    int width_;
};

/// Splits `state` into 2^width blocks; 1 <= width <= n - 1.
BlockMatrix blocks(const PureState &state, int width);
/// The view would outlive a temporary state.
BlockMatrix blocks(PureState &&state, int width) = delete;

struct ProportionalityResult {
    bool proportional = false;
    /// k with v = k * u. Absent when u is the zero vector or the test failed.
    std::optional<amp_t> ratio;
    /// Entry pair (j, m), j < m, with u_j v_m - u_m v_j far from zero. Set only on failure.
    std::optional<std::pair<size_t, size_t>> witness;
    /// Root-sum-square of all cross products u_j v_m - u_m v_j, divided by
    /// |u| |v|: the sine of the angle between u and v. Zero if either vector is zero.
    double residual = 0;
};

/// Decides whether v = k u for some scalar k, up to relative tolerance `tol`.
///
/// Uses the cross-product criterion: all u_j v_m - u_m v_j vanish. Their
/// root-sum-square equals |u| |v - k u| with k the least-squares ratio, which
/// is computed directly in O(len) without cancellation. A vector whose norm is
/// at most tol times the other's counts as zero and is proportional to anything.
/// Throws on length mismatch or when both vectors are exactly zero.
ProportionalityResult proportional(std::span<const amp_t> u, std::span<const amp_t> v, double tol = kDefaultTolerance);

/// C = v1 (x) v2, the factors of a coefficient vector split at some width.
struct SplitFactors {
    /// Length 2^width; carries the norm and global phase of C.
    std::vector<amp_t> v1;
    /// Length 2^(n - width), unit norm, first significant entry real positive.
    std::vector<amp_t> v2;
    /// Index of the block used as reference (first non-zero block).
    size_t reference_block = 0;
    /// |C - v1 (x) v2| / |C|.
    double residual = 0;
};

/// Why a coefficient vector failed to split at some width.
struct BlockWitness {
    /// Reference block and the first block found not proportional to it.
    size_t reference_block = 0;
    size_t offending_block = 0;
    /// Entry pair inside the blocks, from ProportionalityResult::witness.
    std::pair<size_t, size_t> entries{0, 0};
    double residual = 0;
};

struct SplitResult {
    std::optional<SplitFactors> factors;
    std::optional<BlockWitness> witness;

    bool decomposable() const {
        return factors.has_value();
    }
};

/// Tries to solve C = v1 (x) v2 with v1 of length 2^width.
///
/// The first block with norm above tol * |C| is the reference; every other
/// block must be proportional to it. On success, v2 is the normalized
/// reference block rotated so its first significant entry is real positive,
/// and v1[l] = k_l * a_ref. Success also requires the reconstruction residual
/// to stay within tol.
SplitResult decompose_at(std::span<const amp_t> amplitudes, int num_qubits, int width, double tol = kDefaultTolerance);
SplitResult decompose_at(const PureState &state, int width, double tol = kDefaultTolerance);

/// Closed-form two-qubit test: |c0 c3 - c1 c2| <= tol * |C|^2.
bool two_qubit_product_test(const PureState &state, double tol = kDefaultTolerance);

}  // namespace qsep

#endif

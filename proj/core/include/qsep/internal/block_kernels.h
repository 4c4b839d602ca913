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

// Kernels shared by blocks.cc and factorizer.cc. Not part of the public API.

#ifndef QSEP_INTERNAL_BLOCK_KERNELS_H
#define QSEP_INTERNAL_BLOCK_KERNELS_H

#include <span>
#include <utility>

#include "qsep/blocks.h"

namespace qsep::internal {

double norm_sq(std::span<const amp_t> v);
amp_t inner(std::span<const amp_t> u, std::span<const amp_t> v);
double residual_sq(std::span<const amp_t> u, std::span<const amp_t> v, amp_t k);
std::pair<size_t, size_t> cross_witness(std::span<const amp_t> u, std::span<const amp_t> v);

struct BlockTest {
    bool proportional = false;
    amp_t ratio = 0;
    double norm_sq = 0;
    double sine = 0;
};

/// Tests v against a non-zero reference block whose squared norm is known.
BlockTest test_block(std::span<const amp_t> ref, double ref_norm_sq, std::span<const amp_t> v, double tol);

/// decompose_at with the (permutation-invariant) norm of C supplied by the caller.
SplitResult decompose_blocks(const BlockMatrix &bm, double total_norm, double tol);

}  // namespace qsep::internal

#endif

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

#include "qsep/blocks.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsep/internal/block_kernels.h"

namespace qsep {

BlockMatrix::BlockMatrix(std::span<const amp_t> amplitudes, int num_qubits, int width)
    : amplitudes_(amplitudes), width_(width) {
    if (num_qubits < 2 || width < 1 || width > num_qubits - 1) {
        throw std::invalid_argument("split width must be in [1, n-1]; got width " + std::to_string(width) +
                                    " for n = " + std::to_string(num_qubits));
    }
    if (amplitudes.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
}

BlockMatrix blocks(const PureState &state, int width) {
    return BlockMatrix(state.amplitudes(), state.num_qubits(), width);
}

namespace internal {

double norm_sq(std::span<const amp_t> v) {
    double acc = 0;
    for (const auto &x : v) {
        acc += x.real() * x.real() + x.imag() * x.imag();
    }
    return acc;
}

amp_t inner(std::span<const amp_t> u, std::span<const amp_t> v) {
    amp_t acc = 0;
    for (size_t k = 0; k < u.size(); k++) {
        acc += std::conj(u[k]) * v[k];
    }
    return acc;
}

double residual_sq(std::span<const amp_t> u, std::span<const amp_t> v, amp_t k) {
    double acc = 0;
    for (size_t j = 0; j < u.size(); j++) {
        acc += std::norm(v[j] - k * u[j]);
    }
    return acc;
}

std::pair<size_t, size_t> cross_witness(std::span<const amp_t> u, std::span<const amp_t> v) {
    // If every cross product against the largest entry of u vanished, v - k u
    // would be parallel to u while orthogonal to it, i.e. zero. So when u, v are
    // not proportional the best partner of that entry is a genuine witness.
    size_t j = 0;
    for (size_t k = 1; k < u.size(); k++) {
        if (std::norm(u[k]) > std::norm(u[j])) {
            j = k;
        }
    }
    size_t m = j == 0 && u.size() > 1 ? 1 : 0;
    double best = -1;
    for (size_t k = 0; k < u.size(); k++) {
        if (k == j) {
            continue;
        }
        double c = std::abs(u[j] * v[k] - u[k] * v[j]);
        if (c > best) {
            best = c;
            m = k;
        }
    }
    return j < m ? std::pair{j, m} : std::pair{m, j};
}

BlockTest test_block(std::span<const amp_t> ref, double ref_norm_sq, std::span<const amp_t> v, double tol) {
    BlockTest out;
    // Spelled out: std::complex multiplication goes through the NaN-safe
    // __muldc3 path, which dominates large scans.
    double v_norm_sq = 0, dot_re = 0, dot_im = 0;
    for (size_t k = 0; k < ref.size(); k++) {
        double ur = ref[k].real(), ui = ref[k].imag();
        double vr = v[k].real(), vi = v[k].imag();
        v_norm_sq += vr * vr + vi * vi;
        dot_re += ur * vr + ui * vi;
        dot_im += ur * vi - ui * vr;
    }
    amp_t dot{dot_re, dot_im};
    out.ratio = dot / ref_norm_sq;
    out.norm_sq = v_norm_sq;
    if (v_norm_sq == 0) {
        out.proportional = true;
        return out;
    }
    // Cheap rejection: sin^2 of the angle via the Lagrange identity is only
    // accurate to ~1e-16 absolute, far below any usable tol^2.
    double cos_sq = std::norm(dot) / (ref_norm_sq * v_norm_sq);
    double sin_sq_estimate = 1 - cos_sq;
    if (sin_sq_estimate > 4 * tol * tol + 1e-12) {
        out.proportional = false;
        out.sine = std::sqrt(sin_sq_estimate);
        return out;
    }
    out.sine = std::sqrt(residual_sq(ref, v, out.ratio) / v_norm_sq);
    out.proportional = out.sine <= tol;
    return out;
}

}  // namespace internal

ProportionalityResult proportional(std::span<const amp_t> u, std::span<const amp_t> v, double tol) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("proportional: length mismatch (" + std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()) + ")");
    }
    double nu = internal::norm_sq(u);
    double nv = internal::norm_sq(v);
    if (nu == 0 && nv == 0) {
        throw std::invalid_argument("proportional: both vectors are zero");
    }
    ProportionalityResult out;
    if (std::sqrt(nv) <= tol * std::sqrt(nu)) {
        out.proportional = true;
        out.ratio = amp_t{0};
        return out;
    }
    if (std::sqrt(nu) <= tol * std::sqrt(nv)) {
        out.proportional = true;
        return out;
    }
    auto t = internal::test_block(u, nu, v, tol);
    out.residual = t.sine;
    out.proportional = t.proportional;
    if (t.proportional) {
        out.ratio = t.ratio;
    } else {
        out.witness = internal::cross_witness(u, v);
    }
    return out;
}

SplitResult decompose_at(const PureState &state, int width, double tol) {
    return decompose_at(state.amplitudes(), state.num_qubits(), width, tol);
}

SplitResult decompose_at(std::span<const amp_t> amplitudes, int num_qubits, int width, double tol) {
    BlockMatrix bm(amplitudes, num_qubits, width);
    return internal::decompose_blocks(bm, std::sqrt(internal::norm_sq(amplitudes)), tol);
}

namespace internal {

SplitResult decompose_blocks(const BlockMatrix &bm, double total_norm, double tol) {
    SplitResult out;
    double zero_threshold_sq = tol * total_norm * tol * total_norm;
    size_t nb = bm.num_blocks();

    size_t ref = 0;
    double ref_norm_sq = 0;
    for (; ref < nb; ref++) {
        ref_norm_sq = norm_sq(bm.block(ref));
        if (ref_norm_sq > zero_threshold_sq) {
            break;
        }
    }
    if (ref == nb) {
        throw std::invalid_argument("decompose_at: no non-zero block (zero vector)");
    }
    auto ref_block = bm.block(ref);

    std::vector<amp_t> ratios(nb, amp_t{0});
    ratios[ref] = 1;
    for (size_t l = 0; l < nb; l++) {
        if (l == ref) {
            continue;
        }
        auto b = bm.block(l);
        auto t = test_block(ref_block, ref_norm_sq, b, tol);
        ratios[l] = t.ratio;
        if (t.norm_sq <= zero_threshold_sq || t.proportional) {
            continue;
        }
        auto entries = cross_witness(ref_block, b);
        out.witness = BlockWitness{std::min(ref, l), std::max(ref, l), entries, t.sine};
        return out;
    }

    double ref_norm = std::sqrt(ref_norm_sq);
    size_t lead = 0;
    while (lead + 1 < ref_block.size() && std::abs(ref_block[lead]) <= tol * ref_norm) {
        lead++;
    }
    amp_t phase = ref_block[lead] / std::abs(ref_block[lead]);
    amp_t a_ref = ref_norm * phase;

    SplitFactors f;
    f.reference_block = ref;
    f.v2.resize(ref_block.size());
    for (size_t k = 0; k < ref_block.size(); k++) {
        f.v2[k] = ref_block[k] / a_ref;
    }
    f.v1.resize(nb);
    for (size_t l = 0; l < nb; l++) {
        f.v1[l] = ratios[l] * a_ref;
    }
    f.v1[ref] = a_ref;

    double err_sq = 0;
    size_t worst = ref;
    double worst_err = -1;
    for (size_t l = 0; l < nb; l++) {
        auto b = bm.block(l);
        double e = 0;
        for (size_t k = 0; k < b.size(); k++) {
            e += std::norm(b[k] - f.v1[l] * f.v2[k]);
        }
        err_sq += e;
        if (e > worst_err) {
            worst_err = e;
            worst = l;
        }
    }
    f.residual = std::sqrt(err_sq) / total_norm;
    if (f.residual > tol) {
        // Many near-zero blocks can add up past the tolerance even though each one passed.
        auto entries = cross_witness(ref_block, bm.block(worst));
        out.witness = BlockWitness{std::min(ref, worst), std::max(ref, worst), entries, f.residual};
        return out;
    }
    out.factors = std::move(f);
    return out;
}

}  // namespace internal

bool two_qubit_product_test(const PureState &state, double tol) {
    if (state.num_qubits() != 2) {
        throw std::invalid_argument("two_qubit_product_test needs a 2-qubit state, got " +
                                    std::to_string(state.num_qubits()));
    }
    const auto &c = state.amplitudes();
    double n = state.norm();
    return std::abs(c[0] * c[3] - c[1] * c[2]) <= tol * n * n;
}

}  // namespace qsep

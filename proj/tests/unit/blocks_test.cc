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
#include <random>

#include "gtest/gtest.h"

#include "../test_util.h"
#include "qsep/random.h"

using namespace qsep;
using qsep::testing::distance;
using qsep::testing::kron;
using qsep::testing::random_vector;

namespace {

const amp_t I(0, 1);

void expect_block(std::span<const amp_t> got, std::vector<amp_t> want, double scale) {
    ASSERT_EQ(got.size(), want.size());
    for (size_t k = 0; k < want.size(); k++) {
        ASSERT_NEAR(std::abs(got[k] - want[k] * scale), 0, 1e-15) << k;
    }
}

/// Independent statement of the all-pairs criterion: every two non-zero blocks
/// have vanishing cross products, checked entry pair by entry pair.
bool all_pairs_proportional(const PureState &s, int width, double tol) {
    size_t nb = size_t{1} << width, len = s.dim() / nb;
    double total = s.norm();
    std::vector<std::vector<amp_t>> bl;
    for (size_t l = 0; l < nb; l++) {
        std::vector<amp_t> b(s.amplitudes().begin() + l * len, s.amplitudes().begin() + (l + 1) * len);
        double nrm = 0;
        for (auto x : b) {
            nrm += std::norm(x);
        }
        if (std::sqrt(nrm) > tol * total) {
            bl.push_back(std::move(b));
        }
    }
    for (size_t a = 0; a < bl.size(); a++) {
        for (size_t b = a + 1; b < bl.size(); b++) {
            double na = 0, nb2 = 0, cross = 0;
            for (size_t j = 0; j < len; j++) {
                na += std::norm(bl[a][j]);
                nb2 += std::norm(bl[b][j]);
                for (size_t m = j + 1; m < len; m++) {
                    cross += std::norm(bl[a][j] * bl[b][m] - bl[a][m] * bl[b][j]);
                }
            }
            if (std::sqrt(cross) > tol * std::sqrt(na * nb2)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(blocks, ghz3_width1) {
    PureState s = ghz(3);
    auto bm = blocks(s, 1);
    ASSERT_EQ(bm.num_blocks(), 2u);
    expect_block(bm.block(0), {1, 0, 0, 0}, 1 / std::sqrt(2.0));
    expect_block(bm.block(1), {0, 0, 0, 1}, 1 / std::sqrt(2.0));
}

TEST(blocks, w3_width2) {
    PureState state = w(3);
    auto bm = blocks(state, 2);
    double s = 1 / std::sqrt(3.0);
    expect_block(bm.block(0), {0, 1}, s);
    expect_block(bm.block(1), {1, 0}, s);
    expect_block(bm.block(2), {1, 0}, s);
    expect_block(bm.block(3), {0, 0}, s);
}

TEST(blocks, sizes_and_concatenation) {
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 7; n++) {
        PureState s = random_state(n, rng);
        for (int i = 1; i <= n - 1; i++) {
            auto bm = blocks(s, i);
            ASSERT_EQ(bm.num_blocks(), size_t{1} << i);
            ASSERT_EQ(bm.block_len(), size_t{1} << (n - i));
            size_t k = 0;
            for (size_t l = 0; l < bm.num_blocks(); l++) {
                for (auto x : bm.block(l)) {
                    ASSERT_EQ(x, s[k++]);
                }
            }
        }
        ASSERT_EQ(blocks(s, n - 1).block_len(), 2u);
    }
    PureState g = ghz(3);
    ASSERT_THROW(blocks(g, 0), std::invalid_argument);
    ASSERT_THROW(blocks(g, 3), std::invalid_argument);
}

TEST(proportional, exact_multiple) {
    std::vector<amp_t> u{1, 2}, v{2, 4};
    auto r = proportional(u, v);
    ASSERT_TRUE(r.proportional);
    ASSERT_TRUE(r.ratio.has_value());
    ASSERT_NEAR(std::abs(*r.ratio - amp_t(2)), 0, 1e-15);
    ASSERT_FALSE(r.witness.has_value());
}

TEST(proportional, ghz_pair_not_proportional) {
    double s = 1 / std::sqrt(2.0);
    std::vector<amp_t> u{s, 0, 0, 0}, v{0, 0, 0, s};
    auto r = proportional(u, v);
    ASSERT_FALSE(r.proportional);
    ASSERT_FALSE(r.ratio.has_value());
    ASSERT_TRUE(r.witness.has_value());
    ASSERT_EQ(*r.witness, std::make_pair(size_t{0}, size_t{3}));
    ASSERT_NEAR(r.residual, 1, 1e-15);
}

TEST(proportional, complex_scaling) {
    std::vector<amp_t> u{1, 2, 3, amp_t(1, 1)};  // bc != ad
    std::vector<amp_t> v;
    for (auto x : u) {
        v.push_back(I * x);
    }
    auto r = proportional(u, v);
    ASSERT_TRUE(r.proportional);
    ASSERT_NEAR(std::abs(*r.ratio - I), 0, 1e-15);
}

TEST(proportional, zero_vectors) {
    std::vector<amp_t> u{1, 2}, z{0, 0};
    auto r = proportional(u, z);
    ASSERT_TRUE(r.proportional);
    ASSERT_EQ(*r.ratio, amp_t(0));
    auto r2 = proportional(z, u);
    ASSERT_TRUE(r2.proportional);
    ASSERT_FALSE(r2.ratio.has_value());
    ASSERT_THROW(proportional(z, z), std::invalid_argument);
    ASSERT_THROW(proportional(std::vector<amp_t>{1, 2}, std::vector<amp_t>{1, 2, 3}), std::invalid_argument);
}

TEST(proportional, decision_is_symmetric) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 500; trial++) {
        size_t len = size_t{1} << (1 + trial % 5);
        auto u = random_vector(len, rng);
        std::vector<amp_t> v = trial % 2 ? random_vector(len, rng) : std::vector<amp_t>(len);
        if (trial % 2 == 0) {
            amp_t k = random_vector(1, rng)[0];
            for (size_t j = 0; j < len; j++) {
                v[j] = k * u[j];
            }
        }
        auto a = proportional(u, v), b = proportional(v, u);
        ASSERT_EQ(a.proportional, b.proportional);
        ASSERT_EQ(a.proportional, trial % 2 == 0);
        if (!a.proportional) {
            // The witness pair really has a non-vanishing cross product.
            auto [j, m] = *a.witness;
            ASSERT_GT(std::abs(u[j] * v[m] - u[m] * v[j]), 1e-6);
        }
    }
}

TEST(decompose_at, two_qubit_product_recovers_factors) {
    amp_t alpha(0.6, 0.2), beta(-0.3, 0.5), gamma(0.1, -0.8), delta(0.4, 0.4);
    PureState s = make_state(2, {alpha * gamma, alpha * delta, beta * gamma, beta * delta});
    auto r = decompose_at(s, 1);
    ASSERT_TRUE(r.decomposable());
    const auto &f = *r.factors;
    ASSERT_EQ(f.reference_block, 0u);
    // v1 ∝ (alpha, beta), v2 ∝ (gamma, delta).
    ASSERT_NEAR(std::abs(f.v1[0] * beta - f.v1[1] * alpha), 0, 1e-15);
    ASSERT_NEAR(std::abs(f.v2[0] * delta - f.v2[1] * gamma), 0, 1e-15);
    ASSERT_NEAR(std::hypot(std::abs(f.v2[0]), std::abs(f.v2[1])), 1, 1e-15);
    // Phase convention: leading entry of v2 real positive.
    ASSERT_GT(f.v2[0].real(), 0);
    ASSERT_EQ(f.v2[0].imag(), 0);
    ASSERT_LE(distance(kron(f.v1, f.v2), s.amplitudes()), 1e-15);
}

TEST(decompose_at, ghz3_not_decomposable) {
    auto r = decompose_at(ghz(3), 1);
    ASSERT_FALSE(r.decomposable());
    ASSERT_EQ(r.witness->reference_block, 0u);
    ASSERT_EQ(r.witness->offending_block, 1u);
    ASSERT_EQ(r.witness->entries, std::make_pair(size_t{0}, size_t{3}));
}

TEST(decompose_at, random_product_reconstructs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; trial++) {
        PureState a = random_state(1, rng), b = random_state(3, rng);
        PureState s = tensor(a, b);
        auto r = decompose_at(s, 1);
        ASSERT_TRUE(r.decomposable());
        ASSERT_LE(r.factors->residual, 1e-10);
        ASSERT_LE(distance(kron(r.factors->v1, r.factors->v2), s.amplitudes()), 1e-10);
    }
}

TEST(decompose_at, tensor_at_matching_width_has_tiny_residual) {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 8; n++) {
        for (int i = 1; i < n; i++) {
            PureState s = tensor(random_state(i, rng), random_state(n - i, rng));
            auto r = decompose_at(s, i);
            ASSERT_TRUE(r.decomposable());
            ASSERT_LE(r.factors->residual, 1e-12);
            double v2_norm_sq = 0;
            for (auto x : r.factors->v2) {
                v2_norm_sq += std::norm(x);
            }
            ASSERT_NEAR(std::sqrt(v2_norm_sq), 1, 1e-12);
        }
    }
}

TEST(decompose_at, zero_reference_block_is_skipped) {
    // First block zero: |1> (x) (a, b).
    PureState s = tensor(basis_state(1, 1), make_state(1, {amp_t(0, 0.6), 0.8}));
    auto r = decompose_at(s, 1);
    ASSERT_TRUE(r.decomposable());
    ASSERT_EQ(r.factors->reference_block, 1u);
    ASSERT_EQ(r.factors->v1[0], amp_t(0));
    ASSERT_LE(r.factors->residual, 1e-15);
    // Leading entry of v2 rotated to real positive; the phase moves into v1.
    ASSERT_NEAR(r.factors->v2[0].real(), 0.6, 1e-15);
    ASSERT_NEAR(std::abs(r.factors->v1[1] - I), 0, 1e-15);
}

TEST(decompose_at, width_out_of_range) {
    ASSERT_THROW(decompose_at(ghz(3), 0), std::invalid_argument);
    ASSERT_THROW(decompose_at(ghz(3), 3), std::invalid_argument);
}

TEST(decompose_at, single_reference_agrees_with_all_pairs) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int n = 2; n <= 6; n++) {
        int product = 0;
        for (int trial = 0; trial < 1000; trial++) {
            int i = 1 + trial % (n - 1);
            PureState s = random_state(n, rng);
            int kind = coin(rng);
            if (kind == 1) {
                s = tensor(random_state(i, rng), random_state(n - i, rng));
            } else if (kind == 2) {
                // Product with zero blocks: v1 has some zero entries.
                std::vector<amp_t> v1 = random_vector(size_t{1} << i, rng);
                for (size_t l = 0; l < v1.size(); l += 2) {
                    v1[l] = 0;
                }
                s = make_state(n, kron(v1, random_state(n - i, rng).amplitudes()));
            } else if (kind == 3) {
                // Entangled with zero blocks.
                std::vector<amp_t> v = random_vector(s.dim(), rng);
                std::fill(v.begin(), v.begin() + (v.size() >> i), amp_t(0));
                s = make_state(n, v);
            }
            bool fast = decompose_at(s, i).decomposable();
            ASSERT_EQ(fast, all_pairs_proportional(s, i, kDefaultTolerance)) << "n=" << n << " i=" << i;
            product += fast;
        }
        ASSERT_GT(product, 300);
    }
}

TEST(decompose_at, scale_invariant_decision) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; trial++) {
        int n = 2 + trial % 5, i = 1 + trial % (n - 1);
        PureState s = trial % 2 ? random_state(n, rng) : tensor(random_state(i, rng), random_state(n - i, rng));
        amp_t lambda = random_vector(1, rng)[0] * std::pow(10.0, (trial % 13) - 6);
        std::vector<amp_t> scaled(s.amplitudes().begin(), s.amplitudes().end());
        for (auto &x : scaled) {
            x *= lambda;
        }
        ASSERT_EQ(decompose_at(s, i).decomposable(), decompose_at(make_state(n, scaled), i).decomposable());
    }
}

TEST(two_qubit_product_test, closed_form) {
    double s = 1 / std::sqrt(2.0);
    ASSERT_FALSE(two_qubit_product_test(make_state(2, {s, 0, 0, s})));
    ASSERT_TRUE(two_qubit_product_test(make_state(2, {0.5, 0.5, 0.5, 0.5})));
    ASSERT_THROW(two_qubit_product_test(ghz(3)), std::invalid_argument);
}

TEST(two_qubit_product_test, agrees_with_decompose_at) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; trial++) {
        PureState s = trial % 2 ? random_state(2, rng) : tensor(random_state(1, rng), random_state(1, rng));
        bool closed = two_qubit_product_test(s);
        ASSERT_EQ(closed, decompose_at(s, 1).decomposable());
        ASSERT_EQ(closed, trial % 2 == 0);
    }
}
